#include "gsf/io.hpp"

#include <charconv>
#include <stdexcept>

#include "gsf/exactla.hpp"

namespace gsf {

nlohmann::json scalar_json(const BaseField& F, Scalar x) {
  if (F.s() == 1) return x;
  return F.digits(x);
}

nlohmann::json vector_json(const BaseField& F, const Vec& v) {
  nlohmann::json j = nlohmann::json::array();
  for (auto x : v) j.push_back(scalar_json(F, x));
  return j;
}

nlohmann::json matrix_json(const BaseField& F, const Mat& m) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(F, m(r, c)));
    j.push_back(std::move(row));
  }
  return j;
}

nlohmann::json tower_json(const FieldTower& tower) {
  return {{"p", tower.p()},
          {"s", tower.s()},
          {"n", tower.degree()},
          {"base_poly", tower.base_poly()},
          {"ext_poly", vector_json(tower.base(), tower.ext_poly())}};
}

nlohmann::json element_json(const FieldTower& tower, const FieldElement& a) {
  return vector_json(tower.base(), a.coeffs);
}

nlohmann::json form_json(const FieldTower& tower, const SymForm& form) {
  return {{"b", element_json(tower, form.b)}, {"i", form.i}, {"gram", matrix_json(tower.base(), form.gram)}};
}

nlohmann::json form_subspace_json(const FieldTower& tower, const FormSubspace& forms) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : forms.forms.basis()) basis.push_back(matrix_json(tower.base(), unflatten_sym(v, tower.degree())));
  return {{"i", forms.i ? nlohmann::json(*forms.i) : nlohmann::json(nullptr)}, {"dim", forms.dim()}, {"basis", basis}};
}

FieldElement parse_element(const FieldTower& tower, const std::string& text) {
  std::vector<std::uint32_t> digits;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string tok = text.substr(pos, comma - pos);
    std::uint32_t d = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size()) {
      throw std::invalid_argument("malformed element '" + text + "': expected comma-separated base-p digits");
    }
    if (d >= tower.p()) {
      throw std::invalid_argument("malformed element '" + text + "': digit " + tok + " is not below p = " +
                                  std::to_string(tower.p()));
    }
    digits.push_back(d);
    pos = comma + 1;
  }
  const std::size_t s = tower.s();
  const std::size_t n = tower.degree();
  if (digits.size() > n * s) {
    throw std::invalid_argument("malformed element '" + text + "': more than n*s = " + std::to_string(n * s) +
                                " digits");
  }
  digits.resize(n * s, 0);
  Vec coeffs(n);
  for (std::size_t j = 0; j < n; ++j) {
    coeffs[j] = tower.base().from_digits(std::span<const std::uint32_t>(digits).subspan(j * s, s));
  }
  return tower.element(std::move(coeffs));
}

}  // namespace gsf
