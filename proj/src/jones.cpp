#include <paraqt/errors.hpp>
#include <paraqt/jones.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace paraqt {

namespace {

// Points are (level, position) with level in [0, L]; id = level * strands + position.
struct PointForest {
  std::vector<int> parent;
  explicit PointForest(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

void BraidWord::validate() const {
  if (strands < 2 || strands % 2 != 0) throw InvalidInput("strand count must be even and positive");
  for (std::size_t j = 0; j < word.size(); ++j) {
    const int g = word[j];
    if (g == 0 || std::abs(g) > strands - 1) {
      throw InvalidInput("letter " + std::to_string(j) + " = " + std::to_string(g) + " outside [1, " +
                         std::to_string(strands - 1) + "] in absolute value");
    }
  }
}

LinkDiagram plat_closure(const BraidWord& braid) {
  braid.validate();
  const int s = braid.strands;
  const int levels = static_cast<int>(braid.word.size());
  LinkDiagram d;
  d.strands = s;
  for (int g : braid.word) d.crossings.push_back({std::abs(g) - 1, g > 0 ? 1 : -1});

  // Every point has exactly two neighbours: the segment below, the segment
  // above, or a cap at the two ends.
  auto id = [s](int level, int pos) { return level * s + pos; };
  const std::size_t count = static_cast<std::size_t>((levels + 1) * s);
  std::vector<std::array<int, 2>> nbr(count, {-1, -1});
  auto link = [&](int a, int b) {
    auto& na = nbr[static_cast<std::size_t>(a)];
    auto& nb = nbr[static_cast<std::size_t>(b)];
    (na[0] < 0 ? na[0] : na[1]) = b;
    (nb[0] < 0 ? nb[0] : nb[1]) = a;
  };
  for (int p = 0; p < s; p += 2) {
    link(id(0, p), id(0, p + 1));
    link(id(levels, p), id(levels, p + 1));
  }
  for (int lv = 0; lv < levels; ++lv) {
    const int i = d.crossings[static_cast<std::size_t>(lv)].position;
    for (int p = 0; p < s; ++p) {
      const int q = p == i ? i + 1 : (p == i + 1 ? i : p);
      link(id(lv, p), id(lv + 1, q));
    }
  }

  d.direction.assign(static_cast<std::size_t>(levels), std::vector<int>(static_cast<std::size_t>(s), 0));
  std::vector<bool> seen(count, false);
  for (std::size_t start = 0; start < count; ++start) {
    if (seen[start]) continue;
    ++d.components;
    int prev = -1;
    int cur = static_cast<int>(start);
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      const auto& nb = nbr[static_cast<std::size_t>(cur)];
      // A two-point loop (cap on a level with no crossings between) has both
      // neighbours equal; either choice continues the walk.
      const int next = (nb[0] != prev || nb[0] == nb[1]) ? nb[0] : nb[1];
      const int cl = cur / s;
      const int nl = next / s;
      if (nl == cl + 1) {
        d.direction[static_cast<std::size_t>(cl)][static_cast<std::size_t>(cur % s)] = 1;
      } else if (nl == cl - 1) {
        d.direction[static_cast<std::size_t>(nl)][static_cast<std::size_t>(next % s)] = -1;
      }
      prev = cur;
      cur = next;
    } while (cur != static_cast<int>(start));
  }
  return d;
}

int writhe(const BraidWord& braid) {
  const LinkDiagram d = plat_closure(braid);
  int w = 0;
  for (std::size_t lv = 0; lv < d.crossings.size(); ++lv) {
    const auto [i, sign] = d.crossings[lv];
    const bool parallel = d.direction[lv][static_cast<std::size_t>(i)] == d.direction[lv][static_cast<std::size_t>(i + 1)];
    w += parallel ? -sign : sign;
  }
  return w;
}

int letter_sum(const BraidWord& braid) {
  braid.validate();
  int w = 0;
  for (int g : braid.word) w += g > 0 ? 1 : -1;
  return w;
}

Complex kauffman_bracket(const LinkDiagram& d, Complex a) {
  const int c = static_cast<int>(d.crossings.size());
  if (c > kMaxBracketCrossings) {
    throw ResourceError("bracket state sum limited to " + std::to_string(kMaxBracketCrossings) + " crossings");
  }
  const int s = d.strands;
  const Complex loop = -a * a - 1.0 / (a * a);
  const std::size_t points = static_cast<std::size_t>((c + 1) * s);
  Complex total = 0.0;
  for (std::uint32_t state = 0; state < (std::uint32_t{1} << c); ++state) {
    PointForest f(points);
    for (int p = 0; p < s; p += 2) {
      f.unite(p, p + 1);
      f.unite(c * s + p, c * s + p + 1);
    }
    int exponent = 0;
    for (int lv = 0; lv < c; ++lv) {
      const auto [i, sign] = d.crossings[static_cast<std::size_t>(lv)];
      const bool a_smoothing = (state >> lv) & 1u;
      exponent += a_smoothing ? 1 : -1;
      const bool cupcap = a_smoothing == (sign > 0);
      for (int p = 0; p < s; ++p) {
        if (p != i && p != i + 1) f.unite(lv * s + p, (lv + 1) * s + p);
      }
      if (cupcap) {
        f.unite(lv * s + i, lv * s + i + 1);
        f.unite((lv + 1) * s + i, (lv + 1) * s + i + 1);
      } else {
        f.unite(lv * s + i, (lv + 1) * s + i);
        f.unite(lv * s + i + 1, (lv + 1) * s + i + 1);
      }
    }
    int loops = 0;
    for (std::size_t p = 0; p < points; ++p) loops += f.find(static_cast<int>(p)) == static_cast<int>(p);
    total += std::pow(a, exponent) * std::pow(loop, loops - 1);
  }
  return total;
}

void validate_level(int k) {
  if (!(k == 5 || k >= 7)) throw InvalidInput("k must be 5 or at least 7");
}

Complex kauffman_variable(int k) {
  return Complex{0.0, -1.0} * std::polar(1.0, std::numbers::pi / (2.0 * k));
}

Complex jones_exact(const BraidWord& braid, int k) {
  validate_level(k);
  const Complex a = kauffman_variable(k);
  return std::pow(-a, -3 * writhe(braid)) * kauffman_bracket(plat_closure(braid), a);
}

PathModel::PathModel(int strands, int k) : strands_(strands), k_(k), a_(1.0 / kauffman_variable(k)) {
  if (strands < 2 || strands % 2 != 0) throw InvalidInput("strand count must be even and positive");
  validate_level(k);
  if (strands > 62) throw ResourceError("too many strands");
  lambda_.resize(static_cast<std::size_t>(k + 1));
  for (int j = 0; j <= k; ++j) lambda_[static_cast<std::size_t>(j)] = std::sin(std::numbers::pi * j / k);

  std::vector<int> walk{1};
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(walk.size()) == strands_ + 1) {
      if (walks_.size() >= kMaxPathModelDim) throw ResourceError("path model dimension exceeds 4096");
      index_.emplace(key(walk), walks_.size());
      walks_.push_back(walk);
      return;
    }
    for (int step : {-1, 1}) {
      const int z = walk.back() + step;
      if (z < 1 || z > k_ - 1) continue;
      walk.push_back(z);
      self(self);
      walk.pop_back();
    }
  };
  rec(rec);
}

std::uint64_t PathModel::key(const std::vector<int>& walk) {
  std::uint64_t bits = 0;
  for (std::size_t j = 1; j < walk.size(); ++j) bits = (bits << 1) | (walk[j] > walk[j - 1] ? 1u : 0u);
  return bits;
}

std::size_t PathModel::index_of(const std::vector<int>& walk) const {
  const auto it = index_.find(key(walk));
  if (walk.size() != static_cast<std::size_t>(strands_ + 1) || it == index_.end()) {
    throw InvalidInput("walk is not a path-model basis element");
  }
  return it->second;
}

std::size_t PathModel::cap_index() const {
  std::vector<int> cap(static_cast<std::size_t>(strands_ + 1));
  for (std::size_t j = 0; j < cap.size(); ++j) cap[j] = j % 2 == 0 ? 1 : 2;
  return index_of(cap);
}

void PathModel::apply_e(int i, const ComplexVector& in, ComplexVector& out) const {
  if (i < 1 || i > strands_ - 1) throw InvalidInput("generator index out of range");
  out.setZero(static_cast<Eigen::Index>(dim()));
  const auto ui = static_cast<std::size_t>(i);
  std::vector<int> w;
  for (std::size_t b = 0; b < dim(); ++b) {
    const Complex x = in[static_cast<Eigen::Index>(b)];
    if (x == 0.0) continue;
    const std::vector<int>& walk = walks_[b];
    const int z = walk[ui - 1];
    if (walk[ui + 1] != z) continue;
    w = walk;
    for (int zp : {z - 1, z + 1}) {
      if (zp < 1 || zp > k_ - 1) continue;
      const double lz = lambda_[static_cast<std::size_t>(z)];
      const double coef = walk[ui] == zp ? lambda_[static_cast<std::size_t>(zp)] / lz
                                         : std::sqrt(lambda_[static_cast<std::size_t>(z - 1)] *
                                                     lambda_[static_cast<std::size_t>(z + 1)]) / lz;
      w[ui] = zp;
      out[static_cast<Eigen::Index>(index_.at(key(w)))] += coef * x;
    }
  }
}

ComplexMatrix PathModel::e_matrix(int i) const {
  ComplexMatrix m(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
  ComplexVector col;
  for (Eigen::Index b = 0; b < m.cols(); ++b) {
    apply_e(i, ComplexVector::Unit(m.rows(), b), col);
    m.col(b) = col;
  }
  return m;
}

void PathModel::apply_generator(int letter, ComplexVector& v) const {
  ComplexVector ev;
  apply_e(std::abs(letter), v, ev);
  // rho(sigma^+) = a I + a^{-1} E, rho(sigma^-) = a^{-1} I + a E, with a = A^{-1}.
  if (letter > 0) {
    v = a_ * v + ev / a_;
  } else {
    v = v / a_ + a_ * ev;
  }
}

ComplexMatrix PathModel::generator(int letter) const {
  ComplexMatrix m(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
  for (Eigen::Index b = 0; b < m.cols(); ++b) {
    ComplexVector col = ComplexVector::Unit(m.rows(), b);
    apply_generator(letter, col);
    m.col(b) = col;
  }
  return m;
}

ComplexMatrix ajl_braid_unitary(const BraidWord& braid, int k) {
  braid.validate();
  const PathModel model(braid.strands, k);
  const auto d = static_cast<Eigen::Index>(model.dim());
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
#pragma omp parallel for schedule(static)
  for (Eigen::Index c = 0; c < d; ++c) {
    ComplexVector col = u.col(c);
    for (int g : braid.word) model.apply_generator(g, col);
    u.col(c) = col;
  }
  return u;
}

Complex ajl_cap_amplitude(const BraidWord& braid, int k) {
  braid.validate();
  const PathModel model(braid.strands, k);
  const auto cap = static_cast<Eigen::Index>(model.cap_index());
  ComplexVector v = ComplexVector::Unit(static_cast<Eigen::Index>(model.dim()), cap);
  for (int g : braid.word) model.apply_generator(g, v);
  return v[cap];
}

Complex jones_from_amplitude(Complex q, int writhe, int n, int k) {
  const double phase = -3.0 * std::numbers::pi * (k + 1) * writhe / (2.0 * k);
  return q * std::polar(1.0, phase) * std::pow(2.0 * std::cos(std::numbers::pi / k), n - 1);
}

JonesReport estimate_jones(const BraidWord& braid, int k, double tau, double delta, std::uint64_t seed) {
  const Complex q = ajl_cap_amplitude(braid, k);
  const int w = writhe(braid);
  JonesReport r{sample_amplitude(q, tau, delta, seed), {}, w, k};
  r.amplitude = r.estimate.value;
  r.estimate.value = jones_from_amplitude(r.amplitude, w, braid.n(), k);
  r.estimate.bound *= std::pow(2.0 * std::cos(std::numbers::pi / k), braid.n() - 1);
  return r;
}

}  // namespace paraqt
