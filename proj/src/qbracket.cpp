#include "isw/qbracket.hpp"

#include <random>

namespace isw::qbracket {

CMatrix deformed_bracket(const CMatrix& u, const CMatrix& v, const StatParams& p) {
  Cx q = p.deformation().to_complex();
  return u * v - q * (v * u);
}

namespace {

CMatrix six_bracket_sum(const CMatrix& u, const CMatrix& v, const CMatrix& w,
                        const StatParams& p, bool alternating) {
  auto br = [&](const CMatrix& x, const CMatrix& y) { return deformed_bracket(x, y, p); };
  CMatrix plus = br(br(u, v), w) + br(br(w, u), v) + br(br(v, w), u);
  CMatrix minus = br(br(v, u), w) + br(br(u, w), v) + br(br(w, v), u);
  return alternating ? plus - minus : plus + minus;
}

}  // namespace

double jacobi_sum_residual(const CMatrix& u, const CMatrix& v, const CMatrix& w,
                           const StatParams& p) {
  Cx q = p.deformation().to_complex();
  Cx coeff = (Cx{1.0, 0.0} - q) * (Cx{1.0, 0.0} - q);
  CMatrix rhs = coeff * (u * v * w + w * u * v + v * w * u + v * u * w + u * w * v + w * v * u);
  return (six_bracket_sum(u, v, w, p, false) - rhs).frobenius_norm();
}

double jacobi_diff_residual(const CMatrix& u, const CMatrix& v, const CMatrix& w,
                            const StatParams& p) {
  Cx q2 = p.deformation().pow(2).to_complex();
  Cx coeff = Cx{1.0, 0.0} - q2;
  CMatrix rhs = coeff * (u * v * w + w * u * v + v * w * u - v * u * w - u * w * v - w * v * u);
  return (six_bracket_sum(u, v, w, p, true) - rhs).frobenius_norm();
}

CMatrix random_operator(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("random_operator: dim must be >= 1");
  std::mt19937_64 eng(seed);
  auto draw = [&]() {
    // Top 53 bits -> [0, 1) -> [-1, 1). mt19937_64 output is standardized,
    // so this mapping is bit-stable across platforms.
    return static_cast<double>(eng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = Cx{draw(), draw()};
  return m;
}

}  // namespace isw::qbracket
