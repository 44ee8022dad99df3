#include "quiverkit/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "quiverkit/error.hpp"

namespace quiverkit::io {

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                e.what());
  }
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json(text, path == "-" ? "<stdin>" : path);
}

namespace {

template <typename T>
T get_as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw Error(what + " has the wrong type");
  }
}

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw Error(what + " is missing \"" + key + "\"");
  return j.at(key);
}

std::size_t vertex_by_label(const std::vector<std::string>& labels, const json& j,
                            const std::string& what) {
  if (j.is_number_unsigned()) {
    auto v = j.get<std::size_t>();
    if (v >= labels.size()) throw Error(what + ": vertex index out of range");
    return v;
  }
  const auto s = get_as<std::string>(j, what);
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return i;
  throw Error(what + ": unknown vertex \"" + s + "\"");
}

Complex complex_from_json(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw Error(what + " must be [re, im]");
  return {get_as<double>(j[0], what), get_as<double>(j[1], what)};
}

json complex_to_json(Complex z) { return json::array({round12(z.real()), round12(z.imag())}); }

}  // namespace

Quiver quiver_from_json(const json& j) {
  const json& adj = field(j, "adj", "quiver");
  if (!adj.is_array()) throw Error("quiver \"adj\" must be an array of rows");
  Quiver::Matrix m;
  for (const auto& row : adj) {
    if (!row.is_array()) throw Error("quiver \"adj\" rows must be arrays");
    std::vector<Quiver::Entry> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw Error("quiver entries must be integers");
      r.push_back(e.get<Quiver::Entry>());
    }
    m.push_back(std::move(r));
  }
  if (j.contains("labels"))
    return Quiver(get_as<std::vector<std::string>>(j.at("labels"), "quiver \"labels\""), m);
  return Quiver(m);
}

json to_json(const Quiver& q) {
  return json{{"labels", q.labels()}, {"adj", q.matrix()}};
}

VertexPermutation permutation_from_json(const json& j) {
  return VertexPermutation(
      get_as<std::vector<std::size_t>>(field(j, "image", "permutation"), "permutation image"));
}

json to_json(const VertexPermutation& p) { return json{{"image", p.image()}}; }

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return Error("bad rational coefficient \"" + text + "\""); };
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw bad();
    for (std::size_t k = start; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw bad();
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

GradedPresentation presentation_from_json(const json& j) {
  const auto vertices =
      get_as<std::vector<std::string>>(field(j, "vertices", "presentation"), "\"vertices\"");
  std::vector<Arrow> arrows;
  for (const auto& a : field(j, "arrows", "presentation")) {
    Arrow arr;
    arr.name = get_as<std::string>(field(a, "name", "arrow"), "arrow name");
    const std::string what = "arrow \"" + arr.name + "\"";
    arr.source = vertex_by_label(vertices, field(a, "src", what), what);
    arr.target = vertex_by_label(vertices, field(a, "tgt", what), what);
    arr.degree = a.contains("deg") ? get_as<int>(a.at("deg"), what + " deg") : 1;
    arrows.push_back(std::move(arr));
  }
  auto index_of = [&](const std::string& name) {
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (arrows[k].name == name) return k;
    throw Error("relation uses unknown arrow \"" + name + "\"");
  };
  std::vector<Relation> relations;
  if (j.contains("relations")) {
    for (const auto& rel : j.at("relations")) {
      if (!rel.is_array()) throw Error("each relation must be an array of terms");
      Relation r;
      for (const auto& t : rel) {
        const json& c = field(t, "coef", "term");
        Rational coef = c.is_number_integer() ? Rational(c.get<long long>())
                                              : parse_rational(get_as<std::string>(c, "coef"));
        std::vector<std::size_t> path;
        for (const auto& name : field(t, "path", "term"))
          path.push_back(index_of(get_as<std::string>(name, "path entry")));
        r.push_back(Term{std::move(coef), std::move(path)});
      }
      relations.push_back(std::move(r));
    }
  }
  return GradedPresentation(vertices, std::move(arrows), std::move(relations));
}

json to_json(const GradedPresentation& p) {
  json arrows = json::array();
  for (const auto& a : p.arrows())
    arrows.push_back({{"name", a.name},
                      {"src", p.vertices()[a.source]},
                      {"tgt", p.vertices()[a.target]},
                      {"deg", a.degree}});
  json relations = json::array();
  for (const auto& rel : p.relations()) {
    json terms = json::array();
    for (const auto& t : rel) {
      json path = json::array();
      for (auto a : t.path) path.push_back(p.arrows()[a].name);
      terms.push_back({{"coef", format_rational(t.coef)}, {"path", path}});
    }
    relations.push_back(terms);
  }
  return json{{"vertices", p.vertices()}, {"arrows", arrows}, {"relations", relations}};
}

CharacterTable table_from_json(const json& j) {
  CharacterTable t;
  t.class_sizes = get_as<std::vector<long long>>(field(j, "class_sizes", "character table"),
                                                 "\"class_sizes\"");
  for (const auto& row : field(j, "chars", "character table")) {
    std::vector<Complex> r;
    for (const auto& z : row) r.push_back(complex_from_json(z, "character value"));
    t.chars.push_back(std::move(r));
  }
  for (const auto& z : field(j, "v_char", "character table"))
    t.v_char.push_back(complex_from_json(z, "V value"));
  return t;
}

json to_json(const CharacterTable& t) {
  json chars = json::array();
  for (const auto& row : t.chars) {
    json r = json::array();
    for (auto z : row) r.push_back(complex_to_json(z));
    chars.push_back(r);
  }
  json v = json::array();
  for (auto z : t.v_char) v.push_back(complex_to_json(z));
  return json{{"class_sizes", t.class_sizes}, {"chars", chars}, {"v_char", v}};
}

json bigint_to_json(const BigInt& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    return x.str();
  return x.convert_to<long long>();
}

json to_json(const SpectralCertificate& c) {
  json poly = json::array();
  for (const auto& coef : c.char_poly.descending()) poly.push_back(bigint_to_json(coef));
  json out{{"rho", round12(c.rho_float)},
           {"exactly_two", c.is_exactly_two},
           {"char_poly", poly},
           {"sturm", {{"at_two", c.at_two.sign_changes},
                      {"bound", format_rational(c.at_bound.point)},
                      {"at_bound", c.at_bound.sign_changes}}}};
  if (c.perron_vector) {
    json v = json::array();
    for (double x : *c.perron_vector) v.push_back(round12(x));
    out["perron_vector"] = v;
  }
  return out;
}

json to_json(const PretzelFactorization& f) {
  return json{{"level", f.level == FactorLevel::Single ? "single" : "doubled"},
              {"base", to_json(f.base)},
              {"copies", f.copies},
              {"base_connected", f.base_connected},
              {"sigma", to_json(f.sigma)},
              {"sigma_cycles", f.sigma.to_cycles()},
              {"relabeling", to_json(f.relabeling)}};
}

json to_json(const HilbertTruncation& h) {
  json out{{"dims", h.dims}};
  if (h.per_pair) out["per_pair"] = *h.per_pair;
  return out;
}

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace quiverkit::io
