#include "diskpoisson/catalog.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace diskpoisson {
namespace {

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return format_number(c.real());
  return format_number(c.real()) + "," + format_number(c.imag());
}

double parse_number(std::string_view text, std::string_view label) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw std::invalid_argument("malformed parameter in catalog label '" + std::string(label) + "'");
  }
  return value;
}

Complex parse_complex(std::string_view text, std::string_view label) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_number(text, label), 0.0};
  return {parse_number(text.substr(0, comma), label), parse_number(text.substr(comma + 1), label)};
}

void validate(const CatalogMap& map, const ComplexField& f, const ComplexField& f_z, const ComplexField& f_zbar,
              const ComplexField& g) {
  constexpr double h = 1e-5;
  constexpr double tol = 1e-6;
  const Complex ih(0.0, h);
  for (int i = 1; i <= 9; ++i) {
    for (int k = 0; k < 12; ++k) {
      const Complex z = std::polar(0.1 * i, 2.0 * std::numbers::pi * k / 12.0);
      // d/dz F = (F_x - i F_y)/2 and d/dzbar F = (F_x + i F_y)/2 by central differences.
      auto dz = [&](const ComplexField& F) {
        const Complex fx = (F(z + h) - F(z - h)) / (2.0 * h);
        const Complex fy = (F(z + ih) - F(z - ih)) / (2.0 * h);
        return 0.5 * (fx - Complex(0, 1) * fy);
      };
      auto dzbar = [&](const ComplexField& F) {
        const Complex fx = (F(z + h) - F(z - h)) / (2.0 * h);
        const Complex fy = (F(z + ih) - F(z - ih)) / (2.0 * h);
        return 0.5 * (fx + Complex(0, 1) * fy);
      };
      const double scale = 1.0 + std::abs(f_z(z)) + std::abs(g(z));
      if (std::abs(dz(f) - f_z(z)) > tol * scale || std::abs(dzbar(f) - f_zbar(z)) > tol * scale) {
        throw std::logic_error("catalog map '" + map.label() + "': Wirtinger derivatives do not match f");
      }
      if (std::abs(4.0 * dzbar(f_z) - g(z)) > tol * scale) {
        throw std::logic_error("catalog map '" + map.label() + "': 4 d/dzbar f_z differs from g");
      }
    }
  }
  if (map.exact_K()) {
    for (int i = 0; i <= 16; ++i) {
      for (int k = 0; k < 32; ++k) {
        const Complex z = std::polar(i / 16.0, 2.0 * std::numbers::pi * k / 32.0);
        const double a = std::abs(f_z(z)), b = std::abs(f_zbar(z));
        if ((a + b) > *map.exact_K() * (1.0 + 1e-6) * std::abs(a - b)) {
          throw std::logic_error("catalog map '" + map.label() + "': distortion exceeds exact_K");
        }
      }
    }
  }
}

}  // namespace

CatalogMap::CatalogMap(std::string label, ComplexField f, ComplexField f_z, ComplexField f_zbar, ComplexField g,
                       std::optional<double> exact_K, CatalogParams params)
    : label_(std::move(label)),
      f_(std::move(f)),
      f_z_(std::move(f_z)),
      f_zbar_(std::move(f_zbar)),
      g_(std::move(g)),
      exact_K_(exact_K),
      params_(params) {
  if (!f_ || !f_z_ || !f_zbar_ || !g_) throw std::invalid_argument("CatalogMap: every field must be set");
  if (exact_K_ && !(*exact_K_ >= 1.0)) throw std::invalid_argument("CatalogMap: exact_K must be >= 1");
  validate(*this, f_, f_z_, f_zbar_, g_);
  harmonic_ = true;
  for (int i = 0; i <= 8 && harmonic_; ++i) {
    for (int k = 0; k < 8; ++k) {
      if (g_(std::polar(i / 8.0, 2.0 * std::numbers::pi * k / 8.0)) != Complex{}) {
        harmonic_ = false;
        break;
      }
    }
  }
}

CatalogMap CatalogMap::identity() {
  return CatalogMap(
      "identity", [](Complex z) { return z; }, [](Complex) { return Complex(1.0); }, [](Complex) { return Complex{}; },
      [](Complex) { return Complex{}; }, 1.0);
}

CatalogMap CatalogMap::scale(double M) {
  if (!(M > 0.0)) throw std::invalid_argument("scale: M must be positive");
  CatalogParams params;
  params.scale = M;
  return CatalogMap(
      "scale:" + format_number(M), [M](Complex z) { return M * z; }, [M](Complex) { return Complex(M); },
      [](Complex) { return Complex{}; }, [](Complex) { return Complex{}; }, 1.0, params);
}

CatalogMap CatalogMap::shear(Complex beta) {
  const double b = std::abs(beta);
  if (!(b < 1.0)) throw std::invalid_argument("shear: |beta| must be below 1");
  CatalogParams params;
  params.beta = beta;
  return CatalogMap(
      "shear:" + format_complex(beta), [beta](Complex z) { return z + beta * std::conj(z); },
      [](Complex) { return Complex(1.0); }, [beta](Complex) { return beta; }, [](Complex) { return Complex{}; },
      (1.0 + b) / (1.0 - b), params);
}

CatalogMap CatalogMap::quadratic_source(Complex c) {
  const double m = std::abs(c);
  if (!(m < 0.5)) throw std::invalid_argument("quadratic-source: |c| must be below 1/2");
  CatalogParams params;
  params.c = c;
  return CatalogMap(
      "quadratic-source:" + format_complex(c), [c](Complex z) { return z + c * std::norm(z); },
      [c](Complex z) { return 1.0 + c * std::conj(z); }, [c](Complex z) { return c * z; },
      [c](Complex) { return 4.0 * c; }, 1.0 / (1.0 - 2.0 * m), params);
}

CatalogMap CatalogMap::cubic(double c) {
  if (!(std::abs(c) < 1.0 / 3.0)) throw std::invalid_argument("cubic: |c| must be below 1/3");
  CatalogParams params;
  params.c = Complex(c);
  const double K = c >= 0.0 ? (1.0 + 3.0 * c) / (1.0 + c) : (1.0 + c) / (1.0 + 3.0 * c);
  return CatalogMap(
      "cubic:" + format_number(c), [c](Complex z) { return z + c * z * std::norm(z); },
      [c](Complex z) { return 1.0 + 2.0 * c * std::norm(z); }, [c](Complex z) { return c * z * z; },
      [c](Complex z) { return 8.0 * c * z; }, K, params);
}

CatalogMap CatalogMap::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("CatalogMap::scaled: factor must be positive");
  auto f = f_;
  auto fz = f_z_;
  auto fzb = f_zbar_;
  auto g = g_;
  return CatalogMap(
      format_number(factor) + "*" + label_, [f, factor](Complex z) { return factor * f(z); },
      [fz, factor](Complex z) { return factor * fz(z); }, [fzb, factor](Complex z) { return factor * fzb(z); },
      [g, factor](Complex z) { return factor * g(z); }, exact_K_, params_);
}

CatalogMap catalog_from_label(std::string_view label) {
  const auto colon = label.find(':');
  const std::string_view family = label.substr(0, colon);
  const bool has_arg = colon != std::string_view::npos;
  const std::string_view arg = has_arg ? label.substr(colon + 1) : std::string_view{};
  auto require_arg = [&] {
    if (!has_arg || arg.empty()) {
      throw std::invalid_argument("catalog label '" + std::string(label) + "' needs a parameter");
    }
  };
  if (family == "identity") {
    if (has_arg) throw std::invalid_argument("catalog label 'identity' takes no parameter");
    return CatalogMap::identity();
  }
  if (family == "scale") {
    require_arg();
    return CatalogMap::scale(parse_number(arg, label));
  }
  if (family == "shear") {
    require_arg();
    return CatalogMap::shear(parse_complex(arg, label));
  }
  if (family == "quadratic-source") {
    require_arg();
    return CatalogMap::quadratic_source(parse_complex(arg, label));
  }
  if (family == "cubic") {
    require_arg();
    return CatalogMap::cubic(parse_number(arg, label));
  }
  throw std::invalid_argument("unknown catalog label '" + std::string(label) + "'");
}

std::vector<CatalogMap> default_catalog() {
  return {CatalogMap::identity(), CatalogMap::scale(2.0), CatalogMap::shear(0.5), CatalogMap::quadratic_source(0.1),
          CatalogMap::cubic(0.1)};
}

std::vector<CatalogEntry> catalog_listing() {
  return {
      {"identity", "f(z) = z", "1", "0"},
      {"scale:M", "f(z) = M z, M > 0", "1", "0"},
      {"shear:b", "f(z) = z + b conj(z), |b| < 1", "(1+|b|)/(1-|b|)", "0"},
      {"quadratic-source:c", "f(z) = z + c |z|^2, |c| < 1/2", "1/(1-2|c|)", "4c"},
      {"cubic:c", "f(z) = z + c z |z|^2, real |c| < 1/3", "(1+3c)/(1+c) for c >= 0, (1+c)/(1+3c) for c < 0",
       "8c z"},
  };
}

}  // namespace diskpoisson
