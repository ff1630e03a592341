#pragma once

#include "gnnmpc/condensing.hpp"

#include <Eigen/Core>

#include <filesystem>
#include <iosfwd>

namespace gnnmpc {

/// Text format: first line `rows cols`, then one row-major line per row with
/// 17 significant digits. Vectors are written as a single column.
void write_matrix(std::ostream& os, const Eigen::MatrixXd& m);
void write_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix(std::istream& is);
Eigen::MatrixXd read_matrix(const std::filesystem::path& path);

/// Writes H.txt, g.txt, C.txt, d.txt and, when locals are given,
/// gamma_u_<i>.txt and gamma_x_<i>.txt with 1-based node numbers.
void dump_condensed(const std::filesystem::path& dir, const CondensedQp& qp,
                    const std::vector<LocalCondensed>* locals = nullptr);

}  // namespace gnnmpc
