#include "genus1/model_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace genus1 {

using nlohmann::json;

namespace {

std::string index_path(const std::string& base, std::size_t i, std::size_t j) {
  return base + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw e.at(where);
    }
  }
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(Integer(std::to_string(v.get<std::uint64_t>())))
                                  : Rational(Integer(std::to_string(v.get<std::int64_t>())));
  }
  throw ParseError(ParseErrorKind::MalformedRational,
                   "expected a rational string such as \"-3/4\", got " + v.dump(), where);
}

void require_keys(const json& obj, const std::vector<std::string>& keys, const std::string& where) {
  if (!obj.is_object())
    throw ParseError(ParseErrorKind::MalformedJson, "expected an object", where);
  for (const auto& k : keys)
    if (!obj.contains(k))
      throw ParseError(ParseErrorKind::WrongCoefficientCount,
                       "missing coefficient '" + k + "' (expected " + std::to_string(keys.size()) + ")",
                       where);
  for (const auto& [k, v] : obj.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      throw ParseError(ParseErrorKind::WrongCoefficientCount,
                       "unexpected coefficient '" + k + "' (expected " + std::to_string(keys.size()) + ")",
                       where);
}

void require_shape(const json& v, std::size_t n, const std::string& where) {
  const std::string want = std::to_string(n) + "x" + std::to_string(n);
  if (!v.is_array() || v.size() != n)
    throw ParseError(ParseErrorKind::WrongMatrixShape, "expected a " + want + " array", where);
  for (std::size_t i = 0; i < n; ++i)
    if (!v[i].is_array() || v[i].size() != n)
      throw ParseError(ParseErrorKind::WrongMatrixShape, "expected a " + want + " array",
                       where + "[" + std::to_string(i) + "]");
}

std::vector<Rational> read_flat(const json& coeffs, int degree) {
  const auto& keys = coefficient_keys(degree);
  require_keys(coeffs, keys, "coefficients");
  std::vector<Rational> out;
  for (const auto& k : keys) out.push_back(read_rational(coeffs[k], "coefficients." + k));
  return out;
}

Matrix<Rational> read_gram(const json& v, const std::string& where) {
  require_shape(v, 4, where);
  Matrix<Rational> g(4, 4, Rational());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = read_rational(v[i][j], index_path(where, i, j));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (g(i, j) != g(j, i))
        throw ParseError(ParseErrorKind::NonSymmetricMatrix,
                         "Gram matrix is not symmetric: " + g(i, j).to_string() + " vs " +
                             g(j, i).to_string() + " at " + index_path(where, j, i),
                         index_path(where, i, j));
  return g;
}

PfaffianModel read_pfaffian(const json& v, const std::string& where) {
  require_shape(v, 5, where);
  PolyMatrix<Rational> m(5, 5, RationalPolynomial(quinary_variables()));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const std::string at = index_path(where, i, j);
      const json& e = v[i][j];
      if (!e.is_string())
        throw ParseError(ParseErrorKind::MalformedPolynomial, "expected a linear form string", at);
      try {
        m(i, j) = parse_polynomial(e.get<std::string>(), quinary_variables());
      } catch (const ParseError& err) {
        throw err.at(at);
      }
      if (!m(i, j).is_zero() && (m(i, j).total_degree() != 1 || !m(i, j).is_homogeneous()))
        throw ParseError(ParseErrorKind::NonLinearEntry,
                         "'" + m(i, j).to_string() + "' is not a linear form in x0..x4", at);
    }
  for (std::size_t i = 0; i < 5; ++i) {
    if (!m(i, i).is_zero())
      throw ParseError(ParseErrorKind::NonAlternatingMatrix, "diagonal entry must be 0",
                       index_path(where, i, i));
    for (std::size_t j = i + 1; j < 5; ++j)
      if (!(m(i, j) == -m(j, i)))
        throw ParseError(ParseErrorKind::NonAlternatingMatrix,
                         "entry is not the negative of " + index_path(where, j, i),
                         index_path(where, i, j));
  }
  return PfaffianModel(std::move(m));
}

json rational_json(const Rational& r) { return r.to_string(); }

json gram_json(const Matrix<Rational>& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(rational_json(g(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json flat_json(int degree, const std::vector<Rational>& values) {
  json out = json::object();
  const auto& keys = coefficient_keys(degree);
  for (std::size_t i = 0; i < keys.size(); ++i) out[keys[i]] = rational_json(values[i]);
  return out;
}

}  // namespace

const std::vector<std::string>& coefficient_keys(int degree) {
  static const std::vector<std::string> k1{"a1", "a2", "a3", "a4", "a6"};
  static const std::vector<std::string> k2{"alpha0", "alpha1", "alpha2", "a", "b", "c", "d", "e"};
  static const std::vector<std::string> k3{"a", "b", "c", "a2", "a3", "b1", "b3", "c1", "c2", "m"};
  switch (degree) {
    case 1: return k1;
    case 2: return k2;
    case 3: return k3;
    default: throw DomainError("degree " + std::to_string(degree) + " has no flat coefficient list");
  }
}

GenusOneModel parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorKind::MalformedJson, e.what());
  }
  if (!doc.is_object()) throw ParseError(ParseErrorKind::MalformedJson, "top level must be an object");
  for (const char* key : {"degree", "coefficients"})
    if (!doc.contains(key))
      throw ParseError(ParseErrorKind::MalformedJson, std::string("missing key '") + key + "'");
  for (const auto& [k, v] : doc.items())
    if (k != "degree" && k != "coefficients")
      throw ParseError(ParseErrorKind::MalformedJson, "unexpected key '" + k + "'", k);

  const json& deg = doc["degree"];
  if (!deg.is_number_integer() || deg.get<std::int64_t>() < 1 || deg.get<std::int64_t>() > 5)
    throw ParseError(ParseErrorKind::UnknownDegree, "degree must be an integer 1..5, got " + deg.dump(),
                     "degree");
  const int degree = static_cast<int>(deg.get<std::int64_t>());
  const json& coeffs = doc["coefficients"];

  switch (degree) {
    case 1: {
      auto v = read_flat(coeffs, 1);
      return WeierstrassModel{v[0], v[1], v[2], v[3], v[4]};
    }
    case 2: {
      auto v = read_flat(coeffs, 2);
      return BinaryQuarticModel{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
    }
    case 3: {
      auto v = read_flat(coeffs, 3);
      return TernaryCubicModel{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
    }
    case 4: {
      require_keys(coeffs, {"q1", "q2"}, "coefficients");
      auto a = read_gram(coeffs["q1"], "coefficients.q1");
      auto b = read_gram(coeffs["q2"], "coefficients.q2");
      return QuadricPairModel(std::move(a), std::move(b));
    }
    default:
      require_keys(coeffs, {"matrix"}, "coefficients");
      return read_pfaffian(coeffs["matrix"], "coefficients.matrix");
  }
}

std::string serialize_model(const GenusOneModel& model) {
  struct Visitor {
    json operator()(const WeierstrassModel& w) const { return flat_json(1, {w.a1, w.a2, w.a3, w.a4, w.a6}); }
    json operator()(const BinaryQuarticModel& m) const {
      return flat_json(2, {m.alpha0, m.alpha1, m.alpha2, m.a, m.b, m.c, m.d, m.e});
    }
    json operator()(const TernaryCubicModel& t) const {
      return flat_json(3, {t.a, t.b, t.c, t.a2, t.a3, t.b1, t.b3, t.c1, t.c2, t.m});
    }
    json operator()(const QuadricPairModel& q) const {
      return json{{"q1", gram_json(q.gram_a())}, {"q2", gram_json(q.gram_b())}};
    }
    json operator()(const PfaffianModel& p) const {
      json rows = json::array();
      for (std::size_t i = 0; i < 5; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < 5; ++j) row.push_back(p.matrix()(i, j).to_string());
        rows.push_back(std::move(row));
      }
      return json{{"matrix", std::move(rows)}};
    }
  };
  json doc;
  doc["degree"] = model_degree(model);
  doc["coefficients"] = std::visit(Visitor{}, model);
  return doc.dump(2) + "\n";
}

}  // namespace genus1
