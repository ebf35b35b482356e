#include <gcenter/errors.hpp>
#include <gcenter/vector_field.hpp>

namespace gcenter {

VectorField::VectorField(Poly2 p, Poly2 q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.is_zero() && q_.is_zero()) throw Error("vector field with both components zero");
}

bool VectorField::vanishes_at(const Rational& x, const Rational& y) const {
  return p_.eval(x, y) == 0 && q_.eval(x, y) == 0;
}

std::string to_string(const VectorField& vf, const VarNames& names) {
  return "(" + to_string(vf.p(), names) + ", " + to_string(vf.q(), names) + ")";
}

}  // namespace gcenter
