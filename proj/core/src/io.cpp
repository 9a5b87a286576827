#include "permorb/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "permorb/error.hpp"

namespace permorb {

namespace {

Integer json_integer(const Json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    const Rational q = parse_rational(v.get<std::string>());
    if (!is_integer(q)) throw Error(ErrorKind::ParseError, "Gram entry " + v.get<std::string>() + " is not an integer");
    return q.get_num();
  }
  throw Error(ErrorKind::ParseError, "Gram entries must be integers, got " + v.dump());
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

DualVector parse_coords(const std::vector<std::string>& parts, std::size_t begin, std::size_t dim) {
  std::vector<Rational> coords;
  for (std::size_t i = begin; i < begin + dim; ++i) coords.push_back(parse_rational(parts.at(i)));
  return DualVector(std::move(coords));
}

int parse_eps(const std::string& s) {
  if (s == "0") return 0;
  if (s == "1") return 1;
  throw Error(ErrorKind::ParseError, "epsilon must be 0 or 1, got '" + s + "'");
}

std::string sign_text(Sign s) { return std::string(1, symbol(s)); }

}  // namespace

IntMatrix parse_gram_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("gram")) throw Error(ErrorKind::ParseError, "expected an object with key \"gram\"");
  const Json& rows = doc["gram"];
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::ParseError, "\"gram\" must be a non-empty array of rows");
  const std::size_t d = rows.size();
  IntMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!rows[i].is_array() || rows[i].size() != d)
      throw Error(ErrorKind::ParseError, "row " + std::to_string(i) + " must have " + std::to_string(d) + " entries");
    for (std::size_t j = 0; j < d; ++j) g(i, j) = json_integer(rows[i][j]);
  }
  return g;
}

IntMatrix read_gram_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_gram_json(buffer.str());
}

OrbifoldLabel parse_label(const Orbifold& orb, std::string_view raw) {
  const std::string text = trim(raw);
  if (text.size() < 3 || text[1] != '(' || text.back() != ')')
    throw Error(ErrorKind::ParseError, "label '" + text + "' does not match D(...), N(...) or T(...)");
  const char kind = text[0];
  const std::string body = text.substr(2, text.size() - 3);
  const std::size_t d = orb.dim();
  try {
    if (kind == 'D' || kind == 'T') {
      const auto halves = split(body, ';');
      if (halves.size() != 2) throw Error(ErrorKind::ParseError, "expected coords;eps in '" + text + "'");
      const auto parts = split(halves[0], ',');
      if (parts.size() != d)
        throw Error(ErrorKind::ParseError, "expected " + std::to_string(d) + " coordinates in '" + text + "'");
      const DualVector lambda = parse_coords(parts, 0, d);
      const int eps = parse_eps(halves[1]);
      return kind == 'D' ? orb.diag(lambda, eps) : orb.twisted(lambda, eps);
    }
    if (kind == 'N') {
      std::vector<std::string> parts;
      for (const auto& half : split(body, ';'))
        for (auto& p : split(half, ',')) parts.push_back(std::move(p));
      if (parts.size() != 2 * d)
        throw Error(ErrorKind::ParseError, "expected " + std::to_string(2 * d) + " coordinates in '" + text + "'");
      return orb.nondiag(parse_coords(parts, 0, d), parse_coords(parts, d, d));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DimensionMismatch) throw Error(ErrorKind::ParseError, e.what());
    throw;
  }
  throw Error(ErrorKind::ParseError, "unknown label kind '" + std::string(1, kind) + "'");
}

Json to_json(const DualVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords) out.push_back(to_string(c));
  return out;
}

Json to_json(const QSqrt& x) {
  return Json{{"rational", to_string(x.rational_part())},
              {"sqrt_coefficient", to_string(x.sqrt_part())},
              {"radicand", to_string(x.radicand())},
              {"text", to_string(x)}};
}

Json to_json(const Orbifold& orb, const OrbifoldLabel& m) {
  Json out;
  out["kind"] = std::string(to_string(m.kind));
  out["lambda"] = to_json(orb.rep(m.first));
  if (m.kind == OrbifoldLabel::Kind::NonDiag) {
    out["mu"] = to_json(orb.rep(m.second));
  } else {
    out["eps"] = m.second;
  }
  out["text"] = orb.to_string(m);
  return out;
}

Json to_json(const Orbifold& orb, const FusionMultiset& m) {
  Json out = Json::array();
  for (const auto& [label, n] : m) out.push_back(Json{{"label", to_json(orb, label)}, {"multiplicity", n}});
  return out;
}

Json to_json(const BaseFusion& base, VlLabel a) {
  return Json{{"kind", "vl"}, {"lambda", to_json(base.rep(a.lambda))}, {"text", base.to_string(a)}};
}

Json to_json(const BaseFusion& base, const VlPlusLabel& a) {
  Json out;
  if (const auto* x = std::get_if<UntwistedNonSplit>(&a)) {
    out["kind"] = "untwisted_nonsplit";
    out["lambda"] = to_json(base.rep(x->lambda));
  } else if (const auto* x = std::get_if<UntwistedSplit>(&a)) {
    out["kind"] = "untwisted_split";
    out["lambda"] = to_json(base.rep(x->lambda));
    out["sign"] = sign_text(x->sign);
  } else {
    const auto& t = std::get<TwistedSplit>(a);
    out["kind"] = "twisted_split";
    out["chi"] = to_string(t.chi);
    out["sign"] = sign_text(t.sign);
  }
  out["text"] = base.to_string(a);
  return out;
}

}  // namespace permorb
