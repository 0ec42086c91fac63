#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>

#include "lowdeg/dense.hpp"
#include "lowdeg/tensor.hpp"

namespace lowdeg {

/// A d-query algorithm alternating fixed unitaries with diagonal sign
/// queries: |psi_x> = U_d (O_{x_d} (x) Id_m) ... U_1 (O_{x_1} (x) Id_m) U_0 |u>.
/// The registers compose by tensor product, so every U_t acts on dimension
/// query_dim * work_dim.
struct QueryAlgorithm {
  int query_dim = 1;   // n
  int work_dim = 1;    // m
  int queries = 1;     // d
  std::vector<Eigen::MatrixXcd> unitaries;  // d+1 of them
  Eigen::VectorXcd start;                   // |u>
  Eigen::VectorXcd accept;                  // |v>

  void validate(double tol = 1e-9) const;
};

/// Amplitude <v|psi_x>; bit i of blocks[t] set means x_t(i) = -1.
cplx qqa_evaluate(const QueryAlgorithm& alg, std::span<const uint32_t> blocks);

/// Coefficient tensor of the amplitude form, by the algebraic route (each
/// query replaced by a diagonal matrix unit) cross-checked against full
/// enumeration of E_x[T(x) x_1(i_1)...x_d(i_d)]; the two must agree to
/// `agree_tol`.
MultilinearTensor qqa_extract_tensor(const QueryAlgorithm& alg,
                                     double agree_tol = 1e-9);

MultilinearTensor qqa_extract_tensor_algebraic(const QueryAlgorithm& alg);
MultilinearTensor qqa_extract_tensor_enumeration(const QueryAlgorithm& alg,
                                                 int64_t eval_cap = (1 << 22));

struct QqaSample {
  std::vector<uint32_t> blocks;
  cplx value;
};

std::vector<QqaSample> qqa_sample_stream(const QueryAlgorithm& alg,
                                         int64_t count, uint64_t seed);

QueryAlgorithm random_query_algorithm(int query_dim, int work_dim, int queries,
                                      uint64_t seed);

/// Trivial instance with all unitaries equal to identity and u = v = e_1:
/// its amplitude is the product of the first diagonal entry of every query,
/// i.e. T(x) = x_1(1)...x_d(1).
QueryAlgorithm dictator_product_algorithm(int query_dim, int work_dim,
                                          int queries);

nlohmann::json to_json(const QueryAlgorithm& alg);
QueryAlgorithm qqa_from_json(const nlohmann::json& doc);
void save_qqa(const std::filesystem::path& path, const QueryAlgorithm& alg);
QueryAlgorithm load_qqa(const std::filesystem::path& path);

/// CSV export: one row per entry, columns i_1..i_d, re, im.
void save_tensor_csv(const std::filesystem::path& path, const MultilinearTensor& t);
MultilinearTensor load_tensor_csv(const std::filesystem::path& path);

}  // namespace lowdeg
