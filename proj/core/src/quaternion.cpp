#include "hyperzeta/quaternion.hpp"

#include <sstream>

#include "hyperzeta/error.hpp"

namespace hyperzeta {

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw InvalidArgument("inversion of the zero quaternion");
  const Rational n = norm();
  return {w_ / n, -x_ / n, -y_ / n, -z_ / n};
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w_ + b.w_, a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w_ - b.w_, a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
          a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
          a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
          a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
}

std::string Quaternion::to_string() const {
  std::ostringstream os;
  os << "[" << w_.get_str() << ", " << x_.get_str() << ", " << y_.get_str() << ", " << z_.get_str() << "]";
  return os.str();
}

}  // namespace hyperzeta
