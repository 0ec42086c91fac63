#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lowdeg/qqa.hpp"
#include "lowdeg/rng.hpp"
#include "lowdeg/spectrum.hpp"
#include "lowdeg/transforms.hpp"

namespace lowdeg {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TargetKind { Channel, PauliChannel, Unitary, BooleanFn, BoundedPoly, QueryAlg };
enum class ReImPart { Re, Im };

struct ChannelTruth {
  SuperopSpectrum spec;
};
struct PauliChannelTruth {
  int n = 0;
  std::map<PauliString, double> rates;
};
struct UnitaryTruth {
  OperatorSpectrum spec;  // Pauli coefficients; squared moduli sum to 1
};
struct BooleanTruth {
  BooleanSpectrum spec;  // +-1 valued
};
struct PolyTruth {
  BooleanSpectrum spec;  // values in [-1, 1]
};
struct QueryAlgTruth {
  QueryAlgorithm alg;
};

using GroundTruth = std::variant<ChannelTruth, PauliChannelTruth, UnitaryTruth,
                                 BooleanTruth, PolyTruth, QueryAlgTruth>;

TargetKind kind_of(const GroundTruth& truth);
int sites_of(const GroundTruth& truth);

struct SampleRecord {
  std::string primitive;
  std::string inputs;
  std::string outcome;
  uint64_t query_index = 0;
};

struct OracleOptions {
  uint64_t max_queries = 0;  // 0 = unlimited
  bool log_samples = false;  // per-draw records; forces draw-by-draw sampling
};

/// Block encoding of a bounded cube function p on one extra site: the
/// diagonal block holds Diag(p) and the off-diagonal blocks carry
/// +-i Diag(sqrt(1-p^2)), which makes the matrix hermitian and unitary.
/// Throws invariant_error if |p| exceeds 1 anywhere on the cube.
DenseOperator build_block_encoding(const BooleanSpectrum& p);

/// Exact Pauli coefficients of the block encoding, supported on the two
/// sectors {3}x{0,3}^n (the p part) and {2}x{0,3}^n (the sqrt(1-p^2) part).
OperatorSpectrum block_encoding_spectrum(const BooleanSpectrum& p);

/// Query access to a hidden object through measurement primitives only.
/// Every primitive charges its per-primitive counter; the hidden spectrum
/// is never exposed. One oracle serves one logical task at a time;
/// independent oracles with independent seeds may run in parallel.
class ShotOracle {
 public:
  ShotOracle(GroundTruth truth, uint64_t seed, OracleOptions opts = {});

  TargetKind kind() const { return kind_; }
  int sites() const { return sites_; }
  uint64_t seed() const { return seed_; }

  /// Computational-basis samples of the channel's coefficient state:
  /// i.i.d. words x with probability Phi_hat(x,x). One query per shot.
  std::vector<PauliString> sample_choi_diag_channel(int64_t shots);

  /// Mixed-state overlap tests against the coefficient state, combined
  /// into an estimate of Phi_hat(x,y). Shots split equally across the
  /// diagonal, real-mixture and imaginary-mixture tests when x != y.
  cplx estimate_channel_coeff(const PauliString& x, const PauliString& y,
                              int64_t shots);

  /// Pauli-basis samples of the unitary's two-register state: i.i.d. words
  /// x with probability |U_hat(x)|^2.
  std::vector<PauliString> bell_sample_unitary(int64_t shots);

  /// Mean of +-1 ancilla outcomes with expectation Re U_hat(x) (or Im).
  double hadamard_test(const PauliString& x, ReImPart part, int64_t shots);

  /// Prepare the +1 product eigenstate of the probe word s (symbols in
  /// {1,2,3}), apply the Pauli channel, measure site-wise in basis s.
  /// Outcome r = s * x for the hidden error word x of this query.
  BitString pauli_channel_probe(const PauliString& s);

  /// One character-sampling attempt from a +-1 function: costs one quantum
  /// example; succeeds with probability 1/2 and then yields S ~ f_hat(S)^2.
  std::optional<BitString> quantum_example_boolean();

  /// Uniform x with its function value (exact +-1 for Boolean targets).
  /// Bit j of the returned word set means variable j is -1.
  std::pair<BitString, double> classical_example();

  /// Pauli-basis samples of the block encoding's two-register state:
  /// words over n+1 sites with probability |U_hat_p(x)|^2.
  std::vector<PauliString> cj_sample_block_encoding(int64_t shots);

  /// Uniform points with exact amplitudes from a query-algorithm target.
  std::vector<QqaSample> sample_query_algorithm(int64_t count);

  const std::map<std::string, int64_t>& queries_used() const { return queries_; }
  int64_t total_queries() const;
  const std::vector<SampleRecord>& log() const { return log_; }

 private:
  struct Categorical {
    std::vector<PauliString> keys;
    std::vector<double> cum;
  };
  struct BitCategorical {
    std::vector<BitString> keys;
    std::vector<double> cum;
  };

  void charge(const std::string& primitive, int64_t q);
  void append_log(const std::string& primitive, const std::string& inputs,
                  const std::string& outcome);
  const Categorical& choi_diag_dist();
  const Categorical& bell_dist();
  const Categorical& block_encoding_dist();
  const BitCategorical& fourier_sampling_dist();
  double coeff_state_overlap_diag(const PauliString& x) const;
  double swap_test_mean(int64_t shots, double overlap, RngStream& rng,
                        const std::string& inputs);
  double boolean_value(uint64_t point_index) const;

  GroundTruth truth_;
  TargetKind kind_;
  int sites_;
  uint64_t seed_;
  OracleOptions opts_;
  std::map<std::string, int64_t> queries_;
  std::vector<SampleRecord> log_;
  uint64_t next_query_index_ = 0;

  RngStream rng_choi_;
  RngStream rng_swap_;
  RngStream rng_bell_;
  RngStream rng_had_;
  RngStream rng_probe_;
  RngStream rng_example_;
  RngStream rng_block_;
  RngStream rng_qqa_;

  std::optional<Categorical> choi_diag_;
  std::optional<Categorical> bell_;
  std::optional<Categorical> block_;
  std::optional<BitCategorical> fourier_;
  std::optional<OperatorSpectrum> block_spec_;
  std::map<PauliString, double> pauli_rates_;  // Pauli-channel view
  std::vector<PauliString> rate_keys_;
  std::vector<double> rate_cum_;
};

}  // namespace lowdeg
