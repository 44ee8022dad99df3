#include "quiverkit/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "quiverkit/ade.hpp"
#include "quiverkit/census.hpp"
#include "quiverkit/error.hpp"
#include "quiverkit/graded.hpp"
#include "quiverkit/io.hpp"
#include "quiverkit/mckay.hpp"
#include "quiverkit/pretzel.hpp"
#include "quiverkit/spectral.hpp"
#include "quiverkit/symmetry.hpp"

namespace quiverkit::cli {

using io::json;

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = {
      {"quiver", "opposite", "opposite"},
      {"quiver", "union", "disjoint_union"},
      {"quiver", "is-graph", "is_graph"},
      {"quiver", "components", "connected_components"},
      {"quiver", "strong", "is_strongly_connected"},
      {"sym", "auts", "automorphisms"},
      {"sym", "twist", "twist"},
      {"sym", "nakayama", "find_nakayama"},
      {"spec", "charpoly", "char_poly"},
      {"spec", "radius", "spectral_radius"},
      {"ade", "make", "make_ade"},
      {"ade", "classify", "classify_ade"},
      {"mckay", "", "mckay_quiver"},
      {"mckay", "table", "builtin_cyclic_table"},
      {"pretzel", "check", "is_pretzelization"},
      {"pretzel", "factor", "pretzel_factor"},
      {"pretzel", "make", "pretzelize"},
      {"pretzel", "ade", "pretzel_ade_check"},
      {"alg", "dim", "dim_piece"},
      {"alg", "hilbert", "hilbert"},
      {"alg", "gabriel", "gabriel_quiver"},
      {"alg", "standard", "is_standard"},
      {"alg", "preprojective", "preprojective"},
      {"alg", "gk", "gk_estimate"},
      {"census", "", "census"},
  };
  return table;
}

namespace {

enum class Format { Natural, Json, Dot, Text };

struct Options {
  std::string format;
  std::vector<std::string> inputs;
  std::string family;
  std::optional<int> index;
  std::vector<int> cyclic;
  int degree = 0;
  int max_degree = 20;
  std::size_t copies = 1;
  std::string sigma;
  std::size_t max_vertices = 4;
  long long max_entry = 3;
};

class Output {
 public:
  Output(std::ostream& out, Format f) : out_(out), format_(f) {}

  Format format() const { return format_; }

  void quiver(const Quiver& q) {
    switch (format_) {
      case Format::Dot:
        out_ << to_dot(q);
        break;
      case Format::Text:
        for (std::size_t i = 0; i < q.size(); ++i) {
          out_ << q.labels()[i] << ':';
          for (auto e : q.row(i)) out_ << ' ' << e;
          out_ << '\n';
        }
        break;
      default:
        emit(io::to_json(q));
    }
  }

  // json for Natural and Json; text otherwise.
  void value(const json& j, const std::string& text) {
    require_no_dot();
    if (format_ == Format::Text)
      out_ << text << '\n';
    else
      emit(j);
  }

  // Text for Natural and Text.
  void text_first(const json& j, const std::string& text) {
    require_no_dot();
    if (format_ == Format::Json)
      emit(j);
    else
      out_ << text << '\n';
  }

 private:
  void require_no_dot() const {
    if (format_ == Format::Dot) throw CLI::ValidationError("--format", "dot applies to quiver output only");
  }
  void emit(const json& j) { out_ << j.dump() << '\n'; }

  std::ostream& out_;
  Format format_;
};

std::string joined(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? " " : "") << v[k];
  return s.str();
}

Quiver read_quiver(const std::string& path) { return io::quiver_from_json(io::read_json(path)); }

GradedPresentation read_presentation(const std::string& path) {
  return io::presentation_from_json(io::read_json(path));
}

json classification_json(const AdeClassification& c) {
  json j{{"family", std::string(family_name(c.family))}, {"index", nullptr}, {"name", c.to_string()}};
  if (c.index) j["index"] = *c.index;
  return j;
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::NotFound:
      return "not found";
    case SearchStatus::SearchExhausted:
      return "search exhausted";
  }
  return "";
}

json level_json(const LevelResult& r) {
  json j{{"status", status_name(r.status)}, {"factorization", nullptr}};
  if (r.factorization) j["factorization"] = io::to_json(*r.factorization);
  return j;
}

std::string level_text(const char* name, const LevelResult& r) {
  std::ostringstream s;
  s << name << ": " << status_name(r.status);
  if (r.factorization) {
    const auto& f = *r.factorization;
    s << ", base of " << f.base.size() << " vertices"
      << (f.base_connected ? "" : " (disconnected)") << ", copies " << f.copies
      << ", sigma " << f.sigma.to_cycles();
  }
  return s.str();
}

using Handler = std::function<void(const Options&, Output&)>;

std::map<std::string, Handler> handlers() {
  std::map<std::string, Handler> h;

  h["quiver opposite"] = [](const Options& o, Output& out) {
    out.quiver(opposite(read_quiver(o.inputs.at(0))));
  };
  h["quiver union"] = [](const Options& o, Output& out) {
    std::vector<Quiver> parts;
    for (const auto& p : o.inputs) parts.push_back(read_quiver(p));
    out.quiver(disjoint_union(parts));
  };
  h["quiver is-graph"] = [](const Options& o, Output& out) {
    const bool b = is_graph(read_quiver(o.inputs.at(0)));
    out.value(json{{"is_graph", b}}, b ? "true" : "false");
  };
  h["quiver components"] = [](const Options& o, Output& out) {
    const auto comps = connected_components(read_quiver(o.inputs.at(0)));
    std::string text;
    for (const auto& c : comps) text += (text.empty() ? "" : "\n") + joined(c);
    out.value(json{{"components", comps}}, text);
  };
  h["quiver strong"] = [](const Options& o, Output& out) {
    const Quiver q = read_quiver(o.inputs.at(0));
    const bool b = is_strongly_connected(q);
    out.value(json{{"strongly_connected", b}, {"components", strong_components(q)}},
              b ? "true" : "false");
  };

  h["sym auts"] = [](const Options& o, Output& out) {
    const auto auts = automorphisms(read_quiver(o.inputs.at(0)));
    json list = json::array();
    std::string text;
    for (const auto& s : auts) {
      list.push_back(s.to_cycles());
      text += (text.empty() ? "" : "\n") + s.to_cycles();
    }
    out.value(json{{"count", auts.size()}, {"automorphisms", list}}, text);
  };
  h["sym twist"] = [](const Options& o, Output& out) {
    const Quiver q = read_quiver(o.inputs.at(0));
    out.quiver(twist(q, VertexPermutation::parse_cycles(o.sigma, q.size())));
  };
  h["sym nakayama"] = [](const Options& o, Output& out) {
    const auto mu = find_nakayama(read_quiver(o.inputs.at(0)));
    json j{{"nakayama", nullptr}};
    if (mu) j["nakayama"] = json{{"image", mu->image()}, {"cycles", mu->to_cycles()}};
    out.value(j, mu ? mu->to_cycles() : "none");
  };

  h["spec charpoly"] = [](const Options& o, Output& out) {
    const auto p = char_poly(read_quiver(o.inputs.at(0)));
    json coeffs = json::array();
    std::string text;
    for (const auto& c : p.descending()) {
      coeffs.push_back(io::bigint_to_json(c));
      text += (text.empty() ? "" : " ") + c.str();
    }
    out.value(json{{"char_poly", coeffs}}, text);
  };
  h["spec radius"] = [](const Options& o, Output& out) {
    const auto cert = spectral_radius(read_quiver(o.inputs.at(0)));
    std::ostringstream text;
    text << "rho " << io::round12(cert.rho_float) << (cert.is_exactly_two ? ", exactly 2" : "");
    out.value(io::to_json(cert), text.str());
  };

  h["ade make"] = [](const Options& o, Output& out) {
    out.quiver(make_ade(parse_family(o.family), o.index));
  };
  h["ade classify"] = [](const Options& o, Output& out) {
    const auto c = classify_ade(read_quiver(o.inputs.at(0)));
    out.value(classification_json(c), c.to_string());
  };

  h["mckay"] = [](const Options& o, Output& out) {
    if (o.cyclic.empty() == o.inputs.empty())
      throw CLI::ValidationError("mckay", "give either a table file or --cyclic n w1 w2");
    const CharacterTable t = o.cyclic.empty()
                                 ? io::table_from_json(io::read_json(o.inputs.at(0)))
                                 : builtin_cyclic_table(o.cyclic[0], o.cyclic[1], o.cyclic[2]);
    out.quiver(mckay_quiver(t));
  };
  h["mckay table"] = [](const Options& o, Output& out) {
    const auto t = builtin_cyclic_table(o.cyclic.at(0), o.cyclic.at(1), o.cyclic.at(2));
    const json j = io::to_json(t);
    out.value(j, j.dump());
  };

  h["pretzel check"] = [](const Options& o, Output& out) {
    const auto mu = is_pretzelization(read_quiver(o.inputs.at(0)));
    json j{{"pretzelization", mu.has_value()}, {"nakayama", nullptr}};
    if (mu) j["nakayama"] = json{{"image", mu->image()}, {"cycles", mu->to_cycles()}};
    out.text_first(j, mu ? "pretzelization, Nakayama automorphism " + mu->to_cycles()
                         : "not a pretzelization");
  };
  h["pretzel factor"] = [](const Options& o, Output& out) {
    const auto outcome = pretzel_factor(read_quiver(o.inputs.at(0)));
    out.value(json{{"found", outcome.found()},
                   {"single", level_json(outcome.single)},
                   {"doubled", level_json(outcome.doubled)}},
              level_text("single", outcome.single) + "\n" + level_text("doubled", outcome.doubled));
  };
  h["pretzel make"] = [](const Options& o, Output& out) {
    const Quiver g = read_quiver(o.inputs.at(0));
    if (o.copies == 0) throw Error("copies must be positive");
    const auto sigma = VertexPermutation::parse_cycles(o.sigma, g.size() * o.copies);
    out.quiver(pretzelize(g, o.copies, sigma));
  };
  h["pretzel ade"] = [](const Options& o, Output& out) {
    const auto c = pretzel_ade_check(read_quiver(o.inputs.at(0)));
    out.value(json{{"classification", c ? classification_json(*c) : json(nullptr)}},
              c ? c->to_string() : "none");
  };

  h["alg dim"] = [](const Options& o, Output& out) {
    const long long d = dim_piece(read_presentation(o.inputs.at(0)), o.degree);
    out.value(json{{"degree", o.degree}, {"dim", d}}, std::to_string(d));
  };
  h["alg hilbert"] = [](const Options& o, Output& out) {
    const auto hs = hilbert(read_presentation(o.inputs.at(0)), o.max_degree);
    std::string text;
    for (auto d : hs.dims) text += (text.empty() ? "" : " ") + std::to_string(d);
    out.value(io::to_json(hs), text);
  };
  h["alg gabriel"] = [](const Options& o, Output& out) {
    out.quiver(gabriel_quiver(read_presentation(o.inputs.at(0))));
  };
  h["alg standard"] = [](const Options& o, Output& out) {
    const bool b = is_standard(read_presentation(o.inputs.at(0)));
    out.value(json{{"standard", b}}, b ? "true" : "false");
  };
  h["alg preprojective"] = [](const Options& o, Output& out) {
    const json j = io::to_json(preprojective(read_quiver(o.inputs.at(0))));
    out.value(j, j.dump());
  };
  h["alg gk"] = [](const Options& o, Output& out) {
    const auto hs = hilbert(read_presentation(o.inputs.at(0)), o.max_degree);
    const auto est = gk_estimate(hs);
    json seq = json::array();
    for (double v : gk_estimate_sequence(hs)) seq.push_back(io::round12(v));
    std::ostringstream text;
    text << io::round12(est.value) << (est.degenerate ? " (degenerate)" : "");
    out.value(json{{"max_degree", o.max_degree},
                   {"estimate", io::round12(est.value)},
                   {"degenerate", est.degenerate},
                   {"sequence_from", 2},
                   {"sequence", seq}},
              text.str());
  };

  h["census"] = [](const Options& o, Output& out) {
    const auto r = census(o.max_vertices, o.max_entry);
    json rows = json::array();
    std::ostringstream text;
    for (const auto& row : r.rows) {
      rows.push_back({{"vertices", row.graph.size()},
                      {"adj", row.graph.matrix()},
                      {"classification", row.classification.to_string()}});
      text << row.graph.size() << ' ' << json(row.graph.matrix()).dump() << ' '
           << row.classification.to_string() << '\n';
    }
    json anomalies = json::array();
    for (const auto& a : r.anomalies) anomalies.push_back(a.matrix());
    text << r.rows.size() << " graphs with rho = 2, " << r.anomalies.size() << " anomalies";
    out.value(json{{"max_vertices", r.max_vertices},
                   {"max_entry", r.max_entry},
                   {"visited", r.visited},
                   {"row_count", r.rows.size()},
                   {"rows", rows},
                   {"anomalies", anomalies}},
              text.str());
  };
  return h;
}

Format parse_format(const std::string& s) {
  if (s.empty()) return Format::Natural;
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  return Format::Text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quiver combinatorics toolkit", "quiverkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));

  std::map<const CLI::App*, std::string> names;
  auto verb = [&](const std::string& name, const std::string& help) {
    CLI::App* v = app.add_subcommand(name, help);
    names[v] = name;
    return v;
  };
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    names[s] = names[parent] + " " + name;
    return s;
  };
  auto one_input = [&](CLI::App* s, const char* what = "quiver.json") {
    s->add_option("input", o.inputs, std::string(what) + " (- for stdin)")->required()->expected(1);
    return s;
  };

  CLI::App* quiver = verb("quiver", "Basic quiver operations");
  quiver->require_subcommand(1);
  one_input(sub(quiver, "opposite", "Reverse every arrow"));
  sub(quiver, "union", "Disjoint union")
      ->add_option("inputs", o.inputs, "quiver.json files")
      ->required()
      ->expected(1, -1);
  one_input(sub(quiver, "is-graph", "Test symmetry"));
  one_input(sub(quiver, "components", "Connected components"));
  one_input(sub(quiver, "strong", "Strong connectivity"));

  CLI::App* sym = verb("sym", "Automorphisms and twists");
  sym->require_subcommand(1);
  one_input(sub(sym, "auts", "List automorphisms"));
  CLI::App* tw = one_input(sub(sym, "twist", "Twist by an automorphism"));
  tw->add_option("--sigma", o.sigma, "Automorphism in cycle notation")->required();
  one_input(sub(sym, "nakayama", "Find a Nakayama automorphism"));

  CLI::App* spec = verb("spec", "Spectral data");
  spec->require_subcommand(1);
  one_input(sub(spec, "charpoly", "Characteristic polynomial"));
  one_input(sub(spec, "radius", "Spectral radius certificate"));

  CLI::App* ade = verb("ade", "Extended ADE graphs");
  ade->require_subcommand(1);
  CLI::App* make = sub(ade, "make", "Build a graph of the given family");
  make->add_option("family", o.family, "A, D, L, DL, E6, E7 or E8")->required();
  make->add_option("index", o.index, "Index (omit for E types)");
  one_input(sub(ade, "classify", "Classify a connected graph"));

  CLI::App* mckay = verb("mckay", "McKay quivers");
  mckay->require_subcommand(0, 1);
  mckay->add_option("table", o.inputs, "Character table JSON")->expected(0, 1);
  mckay->add_option("--cyclic", o.cyclic, "n w1 w2")->expected(3);
  sub(mckay, "table", "Print the cyclic character table")
      ->add_option("n_w1_w2", o.cyclic, "n w1 w2")
      ->required()
      ->expected(3);

  CLI::App* pretzel = verb("pretzel", "Pretzelizations");
  pretzel->require_subcommand(1);
  one_input(sub(pretzel, "check", "Test for a Nakayama automorphism"));
  one_input(sub(pretzel, "factor", "Factor into a twisted union of a graph"));
  CLI::App* pmake = one_input(sub(pretzel, "make", "Twist copies of a graph"), "graph.json");
  pmake->add_option("--copies", o.copies, "Number of copies")->required();
  pmake->add_option("--sigma", o.sigma, "Automorphism in cycle notation")->required();
  one_input(sub(pretzel, "ade", "ADE type of the base when rho is 2"));

  CLI::App* alg = verb("alg", "Graded quotients of path algebras");
  alg->require_subcommand(1);
  one_input(sub(alg, "dim", "Dimension of one graded piece"), "presentation.json")
      ->add_option("--degree", o.degree, "Degree")
      ->required();
  one_input(sub(alg, "hilbert", "Hilbert series up to a degree"), "presentation.json")
      ->add_option("--max-degree", o.max_degree, "Largest degree")
      ->capture_default_str();
  one_input(sub(alg, "gabriel", "Gabriel quiver"), "presentation.json");
  one_input(sub(alg, "standard", "Test standardness"), "presentation.json");
  one_input(sub(alg, "preprojective", "Preprojective presentation of a graph"), "graph.json");
  one_input(sub(alg, "gk", "Growth estimate"), "presentation.json")
      ->add_option("--max-degree", o.max_degree, "Largest degree")
      ->capture_default_str();

  CLI::App* cen = verb("census", "Graphs of spectral radius 2");
  cen->add_option("--max-vertices", o.max_vertices, "At most 5")->capture_default_str();
  cen->add_option("--max-entry", o.max_entry, "At most 3")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const CLI::App* leaf = &app;
  while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
  const auto table = handlers();
  const auto it = table.find(names[leaf]);
  if (it == table.end()) {
    err << "error: no operation for \"" << names[leaf] << "\"\n";
    return kExitUsage;
  }

  try {
    Output output(out, parse_format(o.format));
    it->second(o, output);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace quiverkit::cli
