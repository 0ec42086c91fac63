#include "lowdeg/oracle.hpp"

#include <cmath>

namespace lowdeg {

TargetKind kind_of(const GroundTruth& truth) {
  struct V {
    TargetKind operator()(const ChannelTruth&) { return TargetKind::Channel; }
    TargetKind operator()(const PauliChannelTruth&) { return TargetKind::PauliChannel; }
    TargetKind operator()(const UnitaryTruth&) { return TargetKind::Unitary; }
    TargetKind operator()(const BooleanTruth&) { return TargetKind::BooleanFn; }
    TargetKind operator()(const PolyTruth&) { return TargetKind::BoundedPoly; }
    TargetKind operator()(const QueryAlgTruth&) { return TargetKind::QueryAlg; }
  };
  return std::visit(V{}, truth);
}

int sites_of(const GroundTruth& truth) {
  struct V {
    int operator()(const ChannelTruth& t) { return t.spec.n(); }
    int operator()(const PauliChannelTruth& t) { return t.n; }
    int operator()(const UnitaryTruth& t) { return t.spec.n(); }
    int operator()(const BooleanTruth& t) { return t.spec.n(); }
    int operator()(const PolyTruth& t) { return t.spec.n(); }
    int operator()(const QueryAlgTruth& t) { return t.alg.query_dim; }
  };
  return std::visit(V{}, truth);
}

DenseOperator build_block_encoding(const BooleanSpectrum& p) {
  const int n = p.n();
  if (n > dense_caps().operator_sites) {
    throw std::invalid_argument("build_block_encoding: above dense cap");
  }
  std::vector<double> table = boolean_synth(p);
  const Eigen::Index dim = static_cast<Eigen::Index>(table.size());
  DenseOperator U = DenseOperator::Zero(2 * dim, 2 * dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double v = table[static_cast<size_t>(i)];
    if (std::abs(v) > 1.0 + 1e-9) {
      throw invariant_error("block encoding: function exceeds 1 in magnitude");
    }
    double r = std::sqrt(std::max(0.0, 1.0 - v * v));
    U(i, i) = v;
    U(dim + i, dim + i) = -v;
    U(i, dim + i) = cplx(0.0, -r);
    U(dim + i, i) = cplx(0.0, r);
  }
  if (!is_unitary(U, 1e-9)) {
    throw invariant_error("block encoding failed the unitarity check");
  }
  return U;
}

OperatorSpectrum block_encoding_spectrum(const BooleanSpectrum& p) {
  const int n = p.n();
  if (n + 1 > PauliString::kMaxSites || n > 20) {
    throw std::invalid_argument("block_encoding_spectrum: function too wide");
  }
  auto sector_word = [n](int lead, const BitString& s) {
    PauliString w(n + 1);
    w = w.with_site(0, lead);
    for (int j = 0; j < n; ++j) {
      if (s.bit(j)) w = w.with_site(j + 1, 3);
    }
    return w;
  };

  OperatorSpectrum out(n + 1);
  for (const auto& [s, c] : p.coeffs()) out.set(sector_word(3, s), c);

  std::vector<double> table = boolean_synth(p);
  for (auto& v : table) {
    if (std::abs(v) > 1.0 + 1e-9) {
      throw invariant_error("block encoding: function exceeds 1 in magnitude");
    }
    v = std::sqrt(std::max(0.0, 1.0 - v * v));
  }
  BooleanSpectrum root = boolean_spectrum(table);
  for (const auto& [s, c] : root.coeffs()) out.set(sector_word(2, s), c);
  return out;
}

ShotOracle::ShotOracle(GroundTruth truth, uint64_t seed, OracleOptions opts)
    : truth_(std::move(truth)),
      kind_(kind_of(truth_)),
      sites_(sites_of(truth_)),
      seed_(seed),
      opts_(opts),
      rng_choi_(RngStream(seed).split("choi_diag")),
      rng_swap_(RngStream(seed).split("swap_test")),
      rng_bell_(RngStream(seed).split("bell_sample")),
      rng_had_(RngStream(seed).split("hadamard_test")),
      rng_probe_(RngStream(seed).split("pauli_probe")),
      rng_example_(RngStream(seed).split("example")),
      rng_block_(RngStream(seed).split("block_encoding")),
      rng_qqa_(RngStream(seed).split("qqa_sample")) {
  if (kind_ == TargetKind::PauliChannel) {
    const auto& t = std::get<PauliChannelTruth>(truth_);
    double total = 0.0;
    for (const auto& [x, p] : t.rates) {
      if (p < -1e-12) throw invariant_error("negative Pauli error rate");
      pauli_rates_[x] = std::max(0.0, p);
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw invariant_error("Pauli error rates do not sum to 1");
    }
    double acc = 0.0;
    for (const auto& [x, p] : pauli_rates_) {
      rate_keys_.push_back(x);
      acc += p;
      rate_cum_.push_back(acc);
    }
  }
  if (kind_ == TargetKind::QueryAlg) {
    std::get<QueryAlgTruth>(truth_).alg.validate();
  }
}

void ShotOracle::charge(const std::string& primitive, int64_t q) {
  if (opts_.max_queries != 0 &&
      static_cast<uint64_t>(total_queries() + q) > opts_.max_queries) {
    throw budget_error("query budget exceeded for " + primitive);
  }
  queries_[primitive] += q;
}

int64_t ShotOracle::total_queries() const {
  int64_t total = 0;
  for (const auto& [k, v] : queries_) total += v;
  return total;
}

void ShotOracle::append_log(const std::string& primitive,
                            const std::string& inputs,
                            const std::string& outcome) {
  if (!opts_.log_samples) {
    ++next_query_index_;
    return;
  }
  log_.push_back(SampleRecord{primitive, inputs, outcome, next_query_index_++});
}

const ShotOracle::Categorical& ShotOracle::choi_diag_dist() {
  if (choi_diag_) return *choi_diag_;
  Categorical dist;
  double acc = 0.0;
  if (kind_ == TargetKind::Channel) {
    const auto& spec = std::get<ChannelTruth>(truth_).spec;
    for (const auto& [k, c] : spec.coeffs()) {
      if (!(k.first == k.second)) continue;
      double p = std::max(0.0, c.real());
      if (p <= 0.0) continue;
      dist.keys.push_back(k.first);
      acc += p;
      dist.cum.push_back(acc);
    }
  } else if (kind_ == TargetKind::PauliChannel) {
    for (size_t i = 0; i < rate_keys_.size(); ++i) {
      dist.keys.push_back(rate_keys_[i]);
      dist.cum.push_back(rate_cum_[i]);
    }
    acc = rate_cum_.empty() ? 0.0 : rate_cum_.back();
  } else {
    throw std::invalid_argument("sample_choi_diag_channel: target is not a channel");
  }
  if (std::abs(acc - 1.0) > 1e-6) {
    throw invariant_error("channel diagonal is not a probability distribution");
  }
  choi_diag_ = std::move(dist);
  return *choi_diag_;
}

std::vector<PauliString> ShotOracle::sample_choi_diag_channel(int64_t shots) {
  const Categorical& dist = choi_diag_dist();
  charge("choi_diag_sample", shots);
  std::vector<PauliString> out;
  out.reserve(static_cast<size_t>(shots));
  for (int64_t i = 0; i < shots; ++i) {
    const PauliString& x = dist.keys[rng_choi_.categorical(dist.cum)];
    out.push_back(x);
    append_log("choi_diag_sample", "", x.digits());
  }
  return out;
}

double ShotOracle::coeff_state_overlap_diag(const PauliString& x) const {
  if (kind_ == TargetKind::Channel) {
    return std::get<ChannelTruth>(truth_).spec.at(x, x).real();
  }
  auto it = pauli_rates_.find(x);
  return it == pauli_rates_.end() ? 0.0 : it->second;
}

double ShotOracle::swap_test_mean(int64_t shots, double overlap, RngStream& rng,
                                  const std::string& inputs) {
  charge("swap_test", shots);
  const double p = std::clamp((1.0 + overlap) / 2.0, 0.0, 1.0);
  int64_t successes = 0;
  if (opts_.log_samples) {
    for (int64_t i = 0; i < shots; ++i) {
      bool hit = rng.bernoulli(p);
      successes += hit ? 1 : 0;
      append_log("swap_test", inputs, hit ? "1" : "0");
    }
  } else {
    successes = rng.binomial(shots, p);
    next_query_index_ += static_cast<uint64_t>(shots);
  }
  return 2.0 * double(successes) / double(shots) - 1.0;
}

cplx ShotOracle::estimate_channel_coeff(const PauliString& x,
                                        const PauliString& y, int64_t shots) {
  if (kind_ != TargetKind::Channel && kind_ != TargetKind::PauliChannel) {
    throw std::invalid_argument("estimate_channel_coeff: target is not a channel");
  }
  if (x == y) {
    if (shots < 1) throw std::invalid_argument("estimate_channel_coeff: shots");
    double t = swap_test_mean(shots, coeff_state_overlap_diag(x), rng_swap_,
                              x.digits() + ":" + x.digits() + ":diag");
    return cplx(t, 0.0);
  }
  if (shots < 4) throw std::invalid_argument("estimate_channel_coeff: shots");

  cplx cxy;
  if (kind_ == TargetKind::Channel) {
    cxy = std::get<ChannelTruth>(truth_).spec.at(x, y);
  } else {
    cxy = cplx(0.0);  // Pauli channels are diagonal
  }
  const double dx = coeff_state_overlap_diag(x);
  const double dy = coeff_state_overlap_diag(y);
  const double mix_re = 0.5 * (dx + dy) + cxy.real();
  const double mix_im = 0.5 * (dx + dy) + cxy.imag();

  const int64_t t_mix = shots / 3;
  const int64_t t_diag = shots - 2 * t_mix;
  const int64_t t_x = t_diag / 2;
  const int64_t t_y = t_diag - t_x;
  const std::string tag = x.digits() + ":" + y.digits();

  double est_x = swap_test_mean(t_x, dx, rng_swap_, tag + ":diagx");
  double est_y = swap_test_mean(t_y, dy, rng_swap_, tag + ":diagy");
  double est_re = swap_test_mean(t_mix, mix_re, rng_swap_, tag + ":re");
  double est_im = swap_test_mean(t_mix, mix_im, rng_swap_, tag + ":im");
  return cplx(est_re - 0.5 * (est_x + est_y), est_im - 0.5 * (est_x + est_y));
}

const ShotOracle::Categorical& ShotOracle::bell_dist() {
  if (bell_) return *bell_;
  if (kind_ != TargetKind::Unitary) {
    throw std::invalid_argument("bell_sample_unitary: target is not a unitary");
  }
  const auto& spec = std::get<UnitaryTruth>(truth_).spec;
  Categorical dist;
  double acc = 0.0;
  for (const auto& [x, c] : spec.coeffs()) {
    double p = std::norm(c);
    if (p <= 0.0) continue;
    dist.keys.push_back(x);
    acc += p;
    dist.cum.push_back(acc);
  }
  if (std::abs(acc - 1.0) > 1e-9) {
    throw invariant_error("unitary spectrum moduli do not sum to 1");
  }
  bell_ = std::move(dist);
  return *bell_;
}

std::vector<PauliString> ShotOracle::bell_sample_unitary(int64_t shots) {
  const Categorical& dist = bell_dist();
  charge("bell_sample", shots);
  std::vector<PauliString> out;
  out.reserve(static_cast<size_t>(shots));
  for (int64_t i = 0; i < shots; ++i) {
    const PauliString& x = dist.keys[rng_bell_.categorical(dist.cum)];
    out.push_back(x);
    append_log("bell_sample", "", x.digits());
  }
  return out;
}

double ShotOracle::hadamard_test(const PauliString& x, ReImPart part,
                                 int64_t shots) {
  if (kind_ != TargetKind::Unitary) {
    throw std::invalid_argument("hadamard_test: target is not a unitary");
  }
  if (shots < 1) throw std::invalid_argument("hadamard_test: shots");
  const cplx c = std::get<UnitaryTruth>(truth_).spec.at(x);
  const double val = part == ReImPart::Re ? c.real() : c.imag();
  charge("hadamard_test", shots);
  const double p = std::clamp((1.0 + val) / 2.0, 0.0, 1.0);
  const std::string tag = x.digits() + (part == ReImPart::Re ? ":re" : ":im");
  int64_t plus = 0;
  if (opts_.log_samples) {
    for (int64_t i = 0; i < shots; ++i) {
      bool hit = rng_had_.bernoulli(p);
      plus += hit ? 1 : 0;
      append_log("hadamard_test", tag, hit ? "+1" : "-1");
    }
  } else {
    plus = rng_had_.binomial(shots, p);
    next_query_index_ += static_cast<uint64_t>(shots);
  }
  return 2.0 * double(plus) / double(shots) - 1.0;
}

BitString ShotOracle::pauli_channel_probe(const PauliString& s) {
  if (kind_ != TargetKind::PauliChannel) {
    throw std::invalid_argument("pauli_channel_probe: target is not a Pauli channel");
  }
  if (!s.all_in(1, 3)) {
    throw std::invalid_argument("pauli_channel_probe: probe word contains 0");
  }
  charge("pauli_probe", 1);
  const PauliString& z = rate_keys_[rng_probe_.categorical(rate_cum_)];
  BitString r = star(s, z);
  append_log("pauli_probe", s.digits(), r.digits());
  return r;
}

const ShotOracle::Categorical& ShotOracle::fourier_sampling_dist() {
  if (fourier_) return *fourier_;
  if (kind_ != TargetKind::BooleanFn) {
    throw std::invalid_argument("quantum_example_boolean: target is not a +-1 function");
  }
  const auto& spec = std::get<BooleanTruth>(truth_).spec;
  Categorical dist;
  double acc = 0.0;
  for (const auto& [s, c] : spec.coeffs()) {
    double p = c * c;
    dist.keys.push_back(PauliString(std::max(1, s.n())));  // placeholder, unused
    acc += p;
    dist.cum.push_back(acc);
  }
  if (std::abs(acc - 1.0) > 1e-9) {
    throw invariant_error("squared Fourier mass is not 1; target not +-1 valued");
  }
  fourier_ = std::move(dist);
  return *fourier_;
}

std::optional<BitString> ShotOracle::quantum_example_boolean() {
  const Categorical& dist = fourier_sampling_dist();
  charge("quantum_example", 1);
  if (!rng_example_.bernoulli(0.5)) {  // basis-conversion coin
    append_log("quantum_example", "", "reject");
    return std::nullopt;
  }
  const auto& spec = std::get<BooleanTruth>(truth_).spec;
  size_t idx = rng_example_.categorical(dist.cum);
  auto it = spec.coeffs().begin();
  std::advance(it, static_cast<long>(idx));
  append_log("quantum_example", "", it->first.digits());
  return it->first;
}

double ShotOracle::boolean_value(uint64_t point_index) const {
  const BooleanSpectrum& spec = kind_ == TargetKind::BooleanFn
                                    ? std::get<BooleanTruth>(truth_).spec
                                    : std::get<PolyTruth>(truth_).spec;
  double v = spec.evaluate(BitString(spec.n(), point_index));
  if (kind_ == TargetKind::BooleanFn) {
    double r = v >= 0.0 ? 1.0 : -1.0;
    if (std::abs(v - r) > 1e-6) {
      throw invariant_error("Boolean target takes a non +-1 value");
    }
    return r;
  }
  return v;
}

std::pair<BitString, double> ShotOracle::classical_example() {
  if (kind_ != TargetKind::BooleanFn && kind_ != TargetKind::BoundedPoly) {
    throw std::invalid_argument("classical_example: target is not a cube function");
  }
  charge("classical_example", 1);
  const int n = sites_;
  const uint64_t mask = n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  uint64_t point = rng_example_.next_u64() & mask;
  double v = boolean_value(point);
  BitString x(n, point);
  append_log("classical_example", "", x.digits());
  return {x, v};
}

const ShotOracle::Categorical& ShotOracle::block_encoding_dist() {
  if (block_) return *block_;
  if (kind_ != TargetKind::BoundedPoly && kind_ != TargetKind::BooleanFn) {
    throw std::invalid_argument("cj_sample_block_encoding: target is not a cube function");
  }
  const BooleanSpectrum& spec = kind_ == TargetKind::BooleanFn
                                    ? std::get<BooleanTruth>(truth_).spec
                                    : std::get<PolyTruth>(truth_).spec;
  block_spec_ = block_encoding_spectrum(spec);
  Categorical dist;
  double acc = 0.0;
  for (const auto& [x, c] : block_spec_->coeffs()) {
    double p = std::norm(c);
    if (p <= 0.0) continue;
    dist.keys.push_back(x);
    acc += p;
    dist.cum.push_back(acc);
  }
  if (std::abs(acc - 1.0) > 1e-9) {
    throw invariant_error("block encoding spectrum mass is not 1");
  }
  block_ = std::move(dist);
  return *block_;
}

std::vector<PauliString> ShotOracle::cj_sample_block_encoding(int64_t shots) {
  const Categorical& dist = block_encoding_dist();
  charge("block_encoding_cj", shots);
  std::vector<PauliString> out;
  out.reserve(static_cast<size_t>(shots));
  for (int64_t i = 0; i < shots; ++i) {
    const PauliString& x = dist.keys[rng_block_.categorical(dist.cum)];
    out.push_back(x);
    append_log("block_encoding_cj", "", x.digits());
  }
  return out;
}

std::vector<QqaSample> ShotOracle::sample_query_algorithm(int64_t count) {
  if (kind_ != TargetKind::QueryAlg) {
    throw std::invalid_argument("sample_query_algorithm: target is not a query algorithm");
  }
  const auto& alg = std::get<QueryAlgTruth>(truth_).alg;
  charge("qqa_sample", count);
  std::vector<QqaSample> out;
  out.reserve(static_cast<size_t>(count));
  const uint32_t mask = (uint32_t{1} << alg.query_dim) - 1;
  for (int64_t i = 0; i < count; ++i) {
    QqaSample s;
    s.blocks.resize(static_cast<size_t>(alg.queries));
    for (auto& b : s.blocks) b = static_cast<uint32_t>(rng_qqa_.next_u64()) & mask;
    s.value = qqa_evaluate(alg, s.blocks);
    std::string in;
    for (auto b : s.blocks) in += std::to_string(b) + ";";
    append_log("qqa_sample", in, std::to_string(s.value.real()));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace lowdeg
