#ifndef GCENTER_DESING_HPP
#define GCENTER_DESING_HPP

#include <gcenter/vector_field.hpp>

#include <span>
#include <string>
#include <vector>

namespace gcenter {

// R = P_m * y - Q_m * x for the lowest order m with a nonzero homogeneous
// part. Its real linear factors are the characteristic directions.
struct CharacteristicPoly {
  Poly2 r;
  int order = 0;
  bool vertical_is_characteristic = false;

  bool all_directions() const { return r.is_zero(); }
};

// Throws NotEquilibrium if vf does not vanish at the origin.
CharacteristicPoly characteristic_directions(const VectorField& vf);

// Field in coordinates w with old = m * w; m must be invertible.
VectorField linear_change(const VectorField& vf, const Matrix2& m);

// (x, y) = (u, u + alpha*v). Throws ZeroAlpha.
VectorField twist(const VectorField& vf, const Rational& alpha);

// (x, y) = (u + beta*v, v). Throws ZeroAlpha.
VectorField shear(const VectorField& vf, const Rational& beta);

// (x, y) = (u + dx, v + dy); moves the point (dx, dy) to the origin.
VectorField translate(const VectorField& vf, const Rational& dx, const Rational& dy);

// (u, v) = (u1, u1*v1): u1' = u'(σ), v1' = (v'(σ) - v1*u'(σ)) / u1.
// Throws NotDivisible when the division by u1 is inexact.
VectorField vertical_blowup(const VectorField& vf);

// Divides both components by var^k. Throws NotDivisible.
VectorField time_rescale(const VectorField& vf, Var var, int k);

// First beta from {1, -1, 2, -2} whose shear makes the vertical direction
// non-characteristic. A twist cannot do this: it maps u = 0 to x = 0.
// Throws Error if none does.
Rational choose_shear(const VectorField& vf);

enum class StepKind { Twist, Shear, Translate, VerticalBlowup, TimeRescale };

struct StepSpec {
  StepKind kind;
  Rational a = 0;  // twist alpha, shear beta, translation dx
  Rational b = 0;  // translation dy
  Var var = Var::X;
  int k = 1;
};

// Comma-separated list, e.g. "blowup,rescale:u:1,shear:-1,translate:0:-1,
// twist:2". The first chart variable is named u, the second v. Throws
// ParseError.
std::vector<StepSpec> parse_steps(const std::string& text);
std::string describe(const StepSpec& s);

struct BlowupStep {
  StepSpec spec;
  VectorField input;
  VectorField output;
};

inline constexpr int kMaxChainDepth = 8;

// The recorded sequence of transformations; step k's input is step k-1's
// output.
class BlowupChain {
 public:
  explicit BlowupChain(VectorField start) : start_(std::move(start)) {}

  const VectorField& start() const { return start_; }
  const std::vector<BlowupStep>& steps() const { return steps_; }
  const VectorField& final_field() const { return steps_.empty() ? start_ : steps_.back().output; }

  // Applies one step. Throws ChainTooDeep past kMaxChainDepth and rethrows
  // step errors with the stage index (1-based) prepended to the message.
  void apply(const StepSpec& spec);

  static BlowupChain run(const VectorField& start, std::span<const StepSpec> specs);

 private:
  VectorField start_;
  std::vector<BlowupStep> steps_;
};

VectorField apply_step(const VectorField& vf, const StepSpec& spec);

}  // namespace gcenter

#endif
