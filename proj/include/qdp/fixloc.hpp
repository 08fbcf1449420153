#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdp/graded.hpp"

namespace qdp::fixloc {

/// The two free generators of a split model: the unit g0 and the fiber class g_n.
enum class Gen : std::uint8_t { Unit, Fiber };

const char* to_string(Gen g);

/// t^k s^e on a generator; k may be negative after inverting t.
struct Cell {
  std::int64_t t = 0;
  std::uint8_t s = 0;
  Gen gen = Gen::Unit;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// "1", "t^3", "s", "t^-2*s" and back. Throws MalformedInput.
std::string monomial_string(const Cell& c);
Cell parse_monomial(const std::string& text, Gen gen);

/// Element of the localized module S^{-1}HE, S = {1, t, t^2, ...}.
class LocalElement {
 public:
  explicit LocalElement(std::uint32_t p) : p_(p) {}

  std::uint32_t prime() const { return p_; }
  const std::map<Cell, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t coefficient(const Cell& c) const;

  void add(const Cell& c, std::int64_t coeff);
  LocalElement& operator+=(const LocalElement& o);
  LocalElement scaled(std::int64_t c) const;
  /// Multiply by t^k.
  LocalElement shifted(std::int64_t k) const;

  /// Cohomological degree of a cell (|t| = 2, |s| = 1, or |t| = 1 for p = 2).
  std::int64_t degree_of(const Cell& c, std::uint32_t n) const;
  /// Largest negative t-exponent as a positive number, 0 if none.
  std::uint64_t pole_order() const;

  friend bool operator==(const LocalElement&, const LocalElement&) = default;

  /// "c*t^k*s*g_n + ..."
  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::map<Cell, std::uint32_t> terms_;
};

struct Differential {
  std::uint32_t lambda = 1;
  std::uint32_t a = 1;
};

/// Key 0 is the Bockstein, i >= 1 is P^i (Sq^i for p = 2, where no separate
/// Bockstein entry is allowed since it equals Sq^1).
using SteenrodData = std::map<std::uint32_t, LocalElement>;

/// E_2-model H(Z/p) (x) H(S^n). Split models carry the action of the
/// operations on g_n; nonsplit models are fixed by d(g_n) = lambda t^a.
class TwoRowModule {
 public:
  /// Validates; throws InvalidModel.
  TwoRowModule(std::uint32_t p, std::uint32_t n, std::optional<Differential> d, SteenrodData data = {});

  static TwoRowModule trivial(std::uint32_t p, std::uint32_t n);
  static TwoRowModule nonsplit(std::uint32_t p, std::uint32_t n, std::uint32_t lambda = 1);
  /// Unit sphere of k copies of the trivial real representation plus l copies
  /// of a free irreducible one (two-dimensional for odd p, the sign
  /// representation for p = 2). k = 0 gives the free, nonsplit case.
  static TwoRowModule representation_sphere(std::uint32_t p, std::uint32_t k, std::uint32_t l);

  std::uint32_t prime() const { return p_; }
  std::uint32_t fiber_degree() const { return n_; }
  const std::optional<Differential>& differential() const { return d_; }
  bool split() const { return !d_.has_value(); }
  const SteenrodData& steenrod_data() const { return data_; }
  /// Value of the operation on g_n; zero when absent.
  LocalElement operation_on_fiber(std::uint32_t op) const;
  /// |t|
  std::uint32_t t_degree() const { return p_ == 2 ? 1 : 2; }
  /// Largest admissible P^i index on g_n.
  std::uint32_t max_operation() const { return p_ == 2 ? n_ : n_ / 2; }

  std::string describe() const;

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::optional<Differential> d_;
  SteenrodData data_;
};

struct HePresentation {
  bool free = true;
  /// dimension over F_p in degrees 0..dims.size()-1
  std::vector<std::uint32_t> dims;
  std::string description;
};

HePresentation he_presentation(const TwoRowModule& m, std::uint32_t max_degree);

/// Bockstein and P^i on the localized module, extended from the data on g_n
/// by the Cartan formula with P(t) = t + t^p and P(s) = s.
LocalElement apply_bockstein(const TwoRowModule& m, const LocalElement& f);
LocalElement apply_power(const TwoRowModule& m, std::uint32_t i, const LocalElement& f);

struct FixResult {
  int rank = -1;
  std::optional<LocalElement> witness;
  std::uint64_t pole_bound = 0;
  /// operations checked: beta and P^1..P^checked_ops
  std::uint64_t checked_ops = 0;
  /// exactly one unit correction makes the top witness work
  bool unique = true;
};

std::uint64_t default_pole_bound(std::uint32_t n);
std::uint64_t operation_bound(std::uint32_t p, std::uint32_t n, std::uint64_t pole_bound);

/// Throws NoWitnessFound when no degree in [0, n] carries a witness.
FixResult fix_rank(const TwoRowModule& m, std::optional<std::uint64_t> pole_bound = std::nullopt);

/// Recheck a witness after clearing denominators by t^(p^k), using the
/// rank-one operations of the steenrod module on coefficients.
bool verify_witness(const TwoRowModule& m, const LocalElement& f, std::uint64_t max_op);

/// Fiberwise join of two models. Both split with diagonal data (operations
/// send g_n into F_p[t] g_n, Bockstein into F_p s g_n) or both nonsplit.
/// Throws InvalidModel otherwise.
TwoRowModule join(const TwoRowModule& a, const TwoRowModule& b);
TwoRowModule join_power(const TwoRowModule& a, std::uint32_t m);

/// Degrees of a basis of H(S^r1) (x) H(S^r2); empty if either rank is -1.
std::vector<int> fix_tensor_rule(int r1, int r2);
/// r1 + r2 + 1. Throws DomainMismatch for ranks below -1.
int fix_join_rule(int r1, int r2);
int iterated_join_rank(int r, std::uint32_t m);

/// Degree of the Euler class of a join.
std::int64_t euler_join(const std::vector<std::int64_t>& degrees);
/// Product of homogeneous classes. Throws Inhomogeneous.
steenrod::GradedElement euler_join(const std::vector<steenrod::GradedElement>& classes);

struct EulerPower {
  steenrod::GradedElement power;
  bool nilpotent = false;
};

/// e^m for the m-fold join. An element of F_p[x,y] (x) Lambda is nilpotent
/// iff its polynomial part vanishes.
EulerPower euler_join_power(const steenrod::GradedElement& e, std::uint32_t m);

}  // namespace qdp::fixloc
