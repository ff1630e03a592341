#pragma once

namespace gnnmpc {

/// Worker threads used by per-node and per-stage loops. Results never depend
/// on this value: parallel loops write disjoint outputs and every reduction
/// runs serially in ascending index order afterwards.
void set_thread_count(int threads);
int thread_count();

/// Restores the previous thread count on scope exit.
class ScopedThreadCount {
 public:
  explicit ScopedThreadCount(int threads) : previous_(thread_count()) { set_thread_count(threads); }
  ~ScopedThreadCount() { set_thread_count(previous_); }
  ScopedThreadCount(const ScopedThreadCount&) = delete;
  ScopedThreadCount& operator=(const ScopedThreadCount&) = delete;

 private:
  int previous_;
};

}  // namespace gnnmpc
