#pragma once

#include <paraqt/estimators.hpp>
#include <paraqt/linalg.hpp>

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace paraqt {

/// Braid on `strands` (even) strands. Letter g means sigma_|g|, crossing
/// strands |g| and |g|+1 (1-based), inverted when g < 0.
struct BraidWord {
  int strands = 2;
  std::vector<int> word;

  void validate() const;
  int n() const { return strands / 2; }
};

/// Plat closure: adjacent strand pairs (0,1), (2,3), ... capped at both ends.
struct LinkDiagram {
  struct Crossing {
    int position;  // 0-based left strand
    int sign;
  };
  int strands = 0;
  std::vector<Crossing> crossings;
  int components = 0;
  /// direction[level][p] = +1 when the strand segment leaving level `level`
  /// at position p is traversed upward in its component's orientation.
  std::vector<std::vector<int>> direction;
};

LinkDiagram plat_closure(const BraidWord& braid);

/// Oriented writhe of the plat closure: each crossing counts its letter sign
/// when the two strands run antiparallel and the opposite sign when parallel.
int writhe(const BraidWord& braid);

/// Sum of letter signs.
int letter_sum(const BraidWord& braid);

inline constexpr int kMaxBracketCrossings = 16;

/// State sum over all smoothings, normalized so one loop gives 1. At a
/// positive crossing the A-smoothing joins the two strands into a cup-cap.
Complex kauffman_bracket(const LinkDiagram& diagram, Complex a);

/// Kauffman variable at level k: A = -i e^{i pi / 2k}, with t = A^4 = e^{2 pi i / k}.
Complex kauffman_variable(int k);

void validate_level(int k);

/// V(t) = (-A)^{-3w} <b^pl>(A) at t = e^{2 pi i / k}.
Complex jones_exact(const BraidWord& braid, int k);

/// Temperley-Lieb path model on 2n strands at level k: walks z_0 = 1, z_1, ..., z_{2n}
/// with |z_j - z_{j-1}| = 1 inside [1, k-1].
class PathModel {
 public:
  PathModel(int strands, int k);

  int strands() const noexcept { return strands_; }
  int k() const noexcept { return k_; }
  std::size_t dim() const noexcept { return walks_.size(); }
  const std::vector<std::vector<int>>& walks() const noexcept { return walks_; }
  std::size_t index_of(const std::vector<int>& walk) const;

  /// The walk (1,2,1,2,...,1).
  std::size_t cap_index() const;

  /// E_i applied to a vector (i is 1-based).
  void apply_e(int i, const ComplexVector& in, ComplexVector& out) const;
  ComplexMatrix e_matrix(int i) const;

  /// v <- rho(letter) v.
  void apply_generator(int letter, ComplexVector& v) const;
  ComplexMatrix generator(int letter) const;

 private:
  static std::uint64_t key(const std::vector<int>& walk);

  int strands_;
  int k_;
  Complex a_;
  std::vector<double> lambda_;
  std::vector<std::vector<int>> walks_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

inline constexpr std::size_t kMaxPathModelDim = 4096;

/// rho(b) = rho(g_L) ... rho(g_1), first letter applied first.
ComplexMatrix ajl_braid_unitary(const BraidWord& braid, int k);

/// <cap| rho(b) |cap>, computed by sparse application to the cap vector.
Complex ajl_cap_amplitude(const BraidWord& braid, int k);

/// q e^{-3 i pi (k+1) w / 2k} (2 cos(pi/k))^{n-1}.
Complex jones_from_amplitude(Complex q, int writhe, int n, int k);

struct JonesReport {
  EstimateReport estimate;  // value is the Jones estimate, bound already rescaled
  Complex amplitude;        // sampled <cap|rho(b)|cap>
  int writhe;
  int k;
};

JonesReport estimate_jones(const BraidWord& braid, int k, double tau, double delta, std::uint64_t seed);

}  // namespace paraqt
