#include "lowdeg/qqa.hpp"

#include <fstream>
#include <sstream>

#include "lowdeg/rng.hpp"

namespace lowdeg {

void QueryAlgorithm::validate(double tol) const {
  if (query_dim < 1 || work_dim < 1 || queries < 1) {
    throw std::invalid_argument("query algorithm shape");
  }
  const Eigen::Index dim = Eigen::Index(query_dim) * work_dim;
  if (static_cast<int>(unitaries.size()) != queries + 1) {
    throw std::invalid_argument("expected d+1 unitaries");
  }
  for (const auto& U : unitaries) {
    if (U.rows() != dim || U.cols() != dim || !is_unitary(U, tol)) {
      throw std::invalid_argument("query algorithm unitary invalid");
    }
  }
  if (start.size() != dim || accept.size() != dim) {
    throw std::invalid_argument("start/accept vector dimension");
  }
  if (std::abs(start.norm() - 1.0) > 1e-10 || std::abs(accept.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("start/accept vector not unit norm");
  }
}

namespace {

// (O_y (x) Id_m) v with O_y = Diag(y); sign bit i of `block` means y_i = -1
void apply_query(const QueryAlgorithm& alg, uint32_t block, Eigen::VectorXcd& v) {
  for (int i = 0; i < alg.query_dim; ++i) {
    if ((block >> i) & 1u) {
      v.segment(Eigen::Index(i) * alg.work_dim, alg.work_dim) *= -1.0;
    }
  }
}

// (E_{ii} (x) Id_m) v: zero out all but the i-th query block
void apply_matrix_unit(const QueryAlgorithm& alg, int i, Eigen::VectorXcd& v) {
  for (int k = 0; k < alg.query_dim; ++k) {
    if (k != i) v.segment(Eigen::Index(k) * alg.work_dim, alg.work_dim).setZero();
  }
}

}  // namespace

cplx qqa_evaluate(const QueryAlgorithm& alg, std::span<const uint32_t> blocks) {
  if (static_cast<int>(blocks.size()) != alg.queries) {
    throw std::invalid_argument("qqa_evaluate: block count");
  }
  Eigen::VectorXcd v = alg.unitaries[0] * alg.start;
  for (int t = 0; t < alg.queries; ++t) {
    apply_query(alg, blocks[static_cast<size_t>(t)], v);
    v = alg.unitaries[static_cast<size_t>(t) + 1] * v;
  }
  return alg.accept.dot(v);
}

MultilinearTensor qqa_extract_tensor_algebraic(const QueryAlgorithm& alg) {
  MultilinearTensor t(alg.queries, alg.query_dim, false);
  std::vector<int> idx(static_cast<size_t>(alg.queries), 0);
  const size_t total = t.entry_count();
  for (size_t flat = 0; flat < total; ++flat) {
    std::vector<int> ix = t.unflatten(flat);
    Eigen::VectorXcd v = alg.unitaries[0] * alg.start;
    for (int q = 0; q < alg.queries; ++q) {
      apply_matrix_unit(alg, ix[static_cast<size_t>(q)], v);
      v = alg.unitaries[static_cast<size_t>(q) + 1] * v;
    }
    t.set_flat(flat, alg.accept.dot(v));
  }
  return t;
}

MultilinearTensor qqa_extract_tensor_enumeration(const QueryAlgorithm& alg,
                                                 int64_t eval_cap) {
  const int bits = alg.queries * alg.query_dim;
  if (bits >= 63 || (int64_t{1} << bits) > eval_cap) {
    throw std::invalid_argument("qqa tensor enumeration above cap");
  }
  const uint64_t total = uint64_t{1} << bits;
  MultilinearTensor t(alg.queries, alg.query_dim, false);
  std::vector<uint32_t> blocks(static_cast<size_t>(alg.queries));
  const uint32_t mask = (uint32_t{1} << alg.query_dim) - 1;
  for (uint64_t a = 0; a < total; ++a) {
    uint64_t rem = a;
    for (int q = 0; q < alg.queries; ++q) {
      blocks[static_cast<size_t>(q)] = static_cast<uint32_t>(rem) & mask;
      rem >>= alg.query_dim;
    }
    cplx val = qqa_evaluate(alg, blocks);
    // accumulate val * x_1(i_1)...x_d(i_d) into every coefficient slot
    for (size_t flat = 0; flat < t.entry_count(); ++flat) {
      std::vector<int> ix = t.unflatten(flat);
      int sign = 0;
      for (int q = 0; q < alg.queries; ++q) {
        sign ^= (blocks[static_cast<size_t>(q)] >> ix[static_cast<size_t>(q)]) & 1u;
      }
      t.set_flat(flat, t.at_flat(flat) + (sign ? -val : val));
    }
  }
  const double scale = 1.0 / double(total);
  for (size_t flat = 0; flat < t.entry_count(); ++flat) {
    t.set_flat(flat, t.at_flat(flat) * scale);
  }
  return t;
}

MultilinearTensor qqa_extract_tensor(const QueryAlgorithm& alg, double agree_tol) {
  MultilinearTensor alg_route = qqa_extract_tensor_algebraic(alg);
  MultilinearTensor enum_route = qqa_extract_tensor_enumeration(alg);
  for (size_t flat = 0; flat < alg_route.entry_count(); ++flat) {
    if (std::abs(alg_route.at_flat(flat) - enum_route.at_flat(flat)) > agree_tol) {
      throw std::runtime_error("tensor extraction routes disagree");
    }
  }
  return alg_route;
}

std::vector<QqaSample> qqa_sample_stream(const QueryAlgorithm& alg,
                                         int64_t count, uint64_t seed) {
  RngStream rng(seed);
  std::vector<QqaSample> out;
  out.reserve(static_cast<size_t>(count));
  const uint32_t mask = (uint32_t{1} << alg.query_dim) - 1;
  for (int64_t i = 0; i < count; ++i) {
    QqaSample s;
    s.blocks.resize(static_cast<size_t>(alg.queries));
    for (auto& b : s.blocks) b = static_cast<uint32_t>(rng.next_u64()) & mask;
    s.value = qqa_evaluate(alg, s.blocks);
    out.push_back(std::move(s));
  }
  return out;
}

QueryAlgorithm random_query_algorithm(int query_dim, int work_dim, int queries,
                                      uint64_t seed) {
  RngStream rng(seed);
  const Eigen::Index dim = Eigen::Index(query_dim) * work_dim;
  QueryAlgorithm alg;
  alg.query_dim = query_dim;
  alg.work_dim = work_dim;
  alg.queries = queries;
  for (int t = 0; t <= queries; ++t) {
    // Haar draw: QR of a complex Gaussian with phase-fixed R diagonal
    Eigen::MatrixXcd G(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        G(i, j) = cplx(rng.normal(), rng.normal());
      }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
    Eigen::MatrixXcd Q = qr.householderQ();
    Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
      cplx r = R(j, j);
      Q.col(j) *= (std::abs(r) < 1e-14) ? cplx(1.0) : r / std::abs(r);
    }
    alg.unitaries.push_back(Q);
  }
  alg.start = Eigen::VectorXcd::Zero(dim);
  alg.start(0) = 1.0;
  alg.accept = alg.start;
  alg.validate();
  return alg;
}

QueryAlgorithm dictator_product_algorithm(int query_dim, int work_dim,
                                          int queries) {
  const Eigen::Index dim = Eigen::Index(query_dim) * work_dim;
  QueryAlgorithm alg;
  alg.query_dim = query_dim;
  alg.work_dim = work_dim;
  alg.queries = queries;
  for (int t = 0; t <= queries; ++t) {
    alg.unitaries.push_back(Eigen::MatrixXcd::Identity(dim, dim));
  }
  alg.start = Eigen::VectorXcd::Zero(dim);
  alg.start(0) = 1.0;
  alg.accept = alg.start;
  return alg;
}

nlohmann::json to_json(const QueryAlgorithm& alg) {
  nlohmann::json doc;
  doc["n"] = alg.query_dim;
  doc["m"] = alg.work_dim;
  doc["d"] = alg.queries;
  auto vec_json = [](const Eigen::VectorXcd& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      a.push_back({v(i).real(), v(i).imag()});
    }
    return a;
  };
  doc["u"] = vec_json(alg.start);
  doc["v"] = vec_json(alg.accept);
  doc["unitaries"] = nlohmann::json::array();
  for (const auto& U : alg.unitaries) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < U.rows(); ++i) {
      for (Eigen::Index j = 0; j < U.cols(); ++j) {
        rows.push_back({U(i, j).real(), U(i, j).imag()});
      }
    }
    doc["unitaries"].push_back(rows);
  }
  return doc;
}

QueryAlgorithm qqa_from_json(const nlohmann::json& doc) {
  QueryAlgorithm alg;
  alg.query_dim = doc.at("n").get<int>();
  alg.work_dim = doc.at("m").get<int>();
  alg.queries = doc.at("d").get<int>();
  const Eigen::Index dim = Eigen::Index(alg.query_dim) * alg.work_dim;
  auto vec_from = [&](const nlohmann::json& a) {
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      v(i) = cplx(a.at(i).at(0).get<double>(), a.at(i).at(1).get<double>());
    }
    return v;
  };
  alg.start = vec_from(doc.at("u"));
  alg.accept = vec_from(doc.at("v"));
  for (const auto& rows : doc.at("unitaries")) {
    Eigen::MatrixXcd U(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        const auto& e = rows.at(static_cast<size_t>(i * dim + j));
        U(i, j) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
    alg.unitaries.push_back(U);
  }
  alg.validate();
  return alg;
}

void save_qqa(const std::filesystem::path& path, const QueryAlgorithm& alg) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(alg).dump(2) << "\n";
}

QueryAlgorithm load_qqa(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  nlohmann::json doc;
  in >> doc;
  return qqa_from_json(doc);
}

void save_tensor_csv(const std::filesystem::path& path, const MultilinearTensor& t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (int q = 0; q < t.arity(); ++q) out << "i" << (q + 1) << ",";
  out << "re,im\n";
  out.precision(17);
  for (size_t flat = 0; flat < t.entry_count(); ++flat) {
    for (int v : t.unflatten(flat)) out << (v + 1) << ",";
    cplx c = t.at_flat(flat);
    out << c.real() << "," << c.imag() << "\n";
  }
}

MultilinearTensor load_tensor_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty tensor csv");
  int arity = 0;
  for (char c : line) {
    if (c == ',') ++arity;
  }
  --arity;  // columns are i_1..i_d, re, im
  if (arity < 1) throw std::runtime_error("bad tensor csv header");

  struct Row {
    std::vector<int> idx;
    cplx value;
  };
  std::vector<Row> rows;
  int side = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    Row r;
    std::string cell;
    for (int q = 0; q < arity; ++q) {
      std::getline(ss, cell, ',');
      r.idx.push_back(std::stoi(cell) - 1);
      side = std::max(side, r.idx.back() + 1);
    }
    std::getline(ss, cell, ',');
    double re = std::stod(cell);
    std::getline(ss, cell, ',');
    double im = std::stod(cell);
    r.value = cplx(re, im);
    rows.push_back(std::move(r));
  }
  MultilinearTensor t(arity, side, false);
  for (const auto& r : rows) t.set(r.idx, r.value);
  return t;
}

}  // namespace lowdeg
