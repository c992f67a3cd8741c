#include "cli.hpp"

#include "kitt/error.hpp"
#include "kitt/parser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

namespace kittc {

using kitt::DomainError;
using kitt::ExtElement;
using kitt::Ideal;
using kitt::IndexSet;
using kitt::ParseError;
using kitt::PolyMatrix;
using kitt::Polynomial;
using kitt::RingPtr;
using Json = nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class DocumentReader {
 public:
  explicit DocumentReader(const std::string& text) : text_(text) {}

  // Polynomial inside the document; errors are moved to document coordinates
  // when the string literal can be located.
  Polynomial poly(const Json& node, const RingPtr& ring, const std::string& where) const {
    if (!node.is_string()) throw DomainError(where + ": expected a polynomial string");
    const auto s = node.get<std::string>();
    try {
      return kitt::parse_poly(s, ring);
    } catch (const ParseError& e) {
      const std::string literal = Json(s).dump();
      const auto at = text_.find(literal);
      if (at == std::string::npos) throw ParseError(where + ": " + e.what(), e.line(), e.column());
      auto [line, col] = line_column(text_, at + 1);
      if (e.line() == 1) col += e.column() - 1;
      else line += e.line() - 1, col = e.column();
      throw ParseError(where + ": " + strip_position(e.what()), line, col);
    }
  }

  std::vector<Polynomial> polys(const Json& node, const RingPtr& ring, const std::string& where) const {
    if (!node.is_array()) throw DomainError(where + ": expected an array of polynomial strings");
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < node.size(); ++k) out.push_back(poly(node[k], ring, where + "[" + std::to_string(k) + "]"));
    return out;
  }

 private:
  static std::string strip_position(const std::string& what) {
    const auto at = what.rfind(" (line ");
    return at == std::string::npos ? what : what.substr(0, at);
  }

  const std::string& text_;
};

RingPtr parse_ring(const Json& node, const DocumentReader& reader) {
  if (!node.is_object()) throw DomainError("ring: expected an object");
  kitt::Field field = kitt::Field::rationals();
  const Json& f = node.contains("field") ? node["field"] : Json("Q");
  if (f.is_string()) {
    const auto name = f.get<std::string>();
    if (name != "Q" && name != "QQ") throw DomainError("ring.field: expected \"Q\" or {\"gf\": p}");
  } else if (f.is_object() && f.contains("gf") && f["gf"].is_number_unsigned()) {
    field = kitt::Field::prime(f["gf"].get<std::uint64_t>());
  } else {
    throw DomainError("ring.field: expected \"Q\" or {\"gf\": p}");
  }
  if (!node.contains("vars") || !node["vars"].is_array()) throw DomainError("ring.vars: expected an array of names");
  std::vector<std::string> vars;
  for (const auto& v : node["vars"]) {
    if (!v.is_string()) throw DomainError("ring.vars: expected strings");
    vars.push_back(v.get<std::string>());
  }
  kitt::MonomialOrder order = kitt::MonomialOrder::grevlex();
  if (node.contains("order")) {
    const auto o = node["order"].is_string() ? node["order"].get<std::string>() : std::string();
    if (o == "lex") order = kitt::MonomialOrder::lex();
    else if (o != "grevlex") throw DomainError("ring.order: expected \"grevlex\" or \"lex\"");
  }
  RingPtr ring = kitt::PolyRing::make(field, vars, order);
  if (node.contains("modulus")) ring = kitt::PolyRing::with_modulus(ring, reader.polys(node["modulus"], ring, "ring.modulus"));
  return ring;
}

std::string polystr(const Polynomial& p) { return p.to_string(); }

Json poly_list(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(polystr(p));
  return out;
}

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(poly_list(m.row(i)));
  return rows;
}

Json ideal_json(const Ideal& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    if (!ideal.ring()->has_modulus() ? !g.is_zero() : !Ideal(ideal.ring()).contains(g)) gens.push_back(g.monic());
  }
  Json out;
  out["generators"] = poly_list(sorted_generators(std::move(gens)));
  out["groebner_basis"] = poly_list(sorted_generators(ideal.groebner_basis()));
  out["unit"] = ideal.is_unit();
  return out;
}

Json opt_int(const std::optional<int>& v) { return v ? Json(*v) : Json("unverified"); }
Json opt_bool(const std::optional<bool>& v) { return v ? Json(*v) : Json("unverified"); }

Json index_list(IndexSet s) {
  Json out = Json::array();
  for (auto x : kitt::index_set_elements(s)) out.push_back(x + 1);
  return out;
}

struct Options {
  std::string command;
  std::uint64_t seed = 0;
  bool expect_equal = false;
  int homology = -1;
  int cycles = -1;
  int d = -1;
  std::string f0;
  std::string witness;
};

struct Outcome {
  Json result;
  bool verified = true;
};

kitt::Representation representation(const Problem& p) {
  if (!p.a) throw DomainError("this command needs the generators \"a\"");
  if (p.phi) return kitt::Representation(p.ring, p.i, *p.a, *p.phi);
  return kitt::Representation::with_found_phi(p.ring, p.i, *p.a);
}

std::size_t degree_option(const Options& o, const Problem& p) {
  if (o.d >= 0) return static_cast<std::size_t>(o.d);
  if (p.d) return *p.d;
  throw DomainError("this command needs --d or a document field \"d\"");
}

kitt::LinearMap linear_map(const Problem& p) {
  if (!p.matrix) throw DomainError("this command needs a \"matrix\"");
  return kitt::LinearMap(*p.matrix);
}

Outcome cmd_kitt(const Problem& p) {
  auto rep = representation(p);
  auto k = kitt::kitt_ideal(rep);
  Outcome o;
  o.result["r"] = rep.r();
  o.result["s"] = rep.s();
  o.result["phi"] = matrix_json(rep.phi());
  Json gens = Json::array();
  for (std::size_t t = 0; t < k.generators.size(); ++t) {
    Json g;
    g["poly"] = polystr(k.generators[t]);
    g["L1"] = index_list(k.provenance[t].l1);
    g["cycle_degree"] = k.provenance[t].cycle_degree;
    g["cycle_index"] = k.provenance[t].cycle_index;
    gens.push_back(std::move(g));
  }
  o.result["generators"] = std::move(gens);
  o.result["ideal"] = ideal_json(k.ideal);
  return o;
}

Outcome cmd_colon(const Problem& p) {
  if (!p.a) throw DomainError("colon needs the generators \"a\"");
  Ideal j = kitt::colon(Ideal(p.ring, *p.a), Ideal(p.ring, p.i));
  Outcome o;
  o.result["ideal"] = ideal_json(j);
  o.result["height"] = opt_int(kitt::height(j));
  o.result["dimension"] = kitt::dim_quotient(j);
  return o;
}

Outcome cmd_fitt(const Problem& p) {
  auto rep = representation(p);
  Outcome o;
  o.result["phi"] = matrix_json(rep.phi());
  o.result["ideal"] = ideal_json(kitt::fitting_ideal(rep));
  return o;
}

Outcome cmd_koszul(const Problem& p, const Options& opt) {
  if ((opt.homology < 0) == (opt.cycles < 0)) throw DomainError("koszul needs exactly one of --homology i, --cycles i");
  kitt::KoszulComplex c(p.ring, p.i);
  const bool hom = opt.homology >= 0;
  const auto deg = static_cast<std::size_t>(hom ? opt.homology : opt.cycles);
  const auto elems = hom ? c.homology_reps(deg) : c.cycles(deg);
  Outcome o;
  o.result["kind"] = hom ? "homology" : "cycles";
  o.result["degree"] = deg;
  o.result["count"] = elems.size();
  Json list = Json::array();
  for (const auto& e : elems) list.push_back(e.to_string());
  o.result["elements"] = std::move(list);
  return o;
}

Outcome cmd_verify(const Problem& p, const Options& opt) {
  auto rep = representation(p);
  kitt::KoszulComplex c(rep.ring(), rep.f());
  const auto report = kitt::verify_report(rep);
  const bool boundary = kitt::ideal_equal(kitt::gamma_boundary_ideal(rep, c), rep.a_ideal());
  const bool homology = kitt::ideal_equal(kitt::kitt_via_homology(rep, c), report.kitt);

  Outcome o;
  Json checks;
  checks["a_in_kitt"] = report.a_in_kitt;
  checks["fitting_in_kitt"] = report.fitting_in_kitt;
  checks["kitt_in_colon"] = report.kitt_in_colon;
  checks["kitt_equals_colon"] = report.kitt_equals_colon;
  checks["colon_in_radical_of_kitt"] = report.colon_in_radical_of_kitt;
  checks["boundary_lemma"] = boundary;
  checks["homology_form"] = homology;
  checks["small_s_implication"] = opt_bool(report.small_s_implication);
  o.result["checks"] = std::move(checks);

  Json residual;
  residual["s"] = report.s;
  residual["height_I"] = opt_int(report.height_i);
  residual["height_J"] = opt_int(report.height_colon);
  residual["height_I_plus_J"] = opt_int(report.height_i_plus_colon);
  residual["proper"] = report.proper;
  residual["algebraic"] = opt_bool(report.algebraic_residual);
  residual["geometric"] = opt_bool(report.geometric_residual);
  residual["arithmetic"] = report.arithmetic_residual;
  if (rep.ring()->has_modulus()) residual["note"] = "heights are not computed over quotient rings";
  o.result["residual"] = std::move(residual);

  o.result["kitt"] = ideal_json(report.kitt);
  o.result["colon"] = ideal_json(report.colon);
  o.result["fitting"] = ideal_json(report.fitting);

  o.verified = report.a_in_kitt && report.fitting_in_kitt && report.kitt_in_colon && report.colon_in_radical_of_kitt &&
               boundary && homology && report.small_s_implication.value_or(true);
  if (opt.expect_equal && !report.kitt_equals_colon) o.verified = false;
  return o;
}

Outcome cmd_specialize(const Problem& p, const Options& opt) {
  if (opt.f0.empty()) throw DomainError("specialize needs --f0 <poly>");
  auto rep = representation(p);
  const Polynomial f0 = kitt::parse_poly(opt.f0, p.ring);
  Outcome o;
  o.result["f0"] = polystr(f0);
  const bool holds = kitt::specialization_check(rep, f0);
  o.result["specialization_holds"] = holds;
  o.verified = holds;
  return o;
}

Outcome cmd_en(const Problem& p, const Options& opt) {
  auto phi = linear_map(p);
  const std::size_t d = degree_option(opt, p);
  auto c = kitt::be_complex(phi, d);
  Outcome o;
  o.result["d"] = d;
  o.result["ranks"] = c.ranks();
  Json modules = Json::array();
  for (std::size_t k = 0; k < c.modules.size(); ++k) {
    Json m;
    m["position"] = k;
    m["rank"] = c.modules[k].rank;
    m["label"] = c.modules[k].label;
    modules.push_back(std::move(m));
  }
  o.result["modules"] = std::move(modules);
  o.result["joining_index"] = c.joining_index;
  Json diffs = Json::array();
  for (std::size_t k = 0; k < c.diffs.size(); ++k) {
    Json m;
    m["from"] = k + 1;
    m["to"] = k;
    m["matrix"] = matrix_json(c.diffs[k]);
    diffs.push_back(std::move(m));
  }
  o.result["differentials"] = std::move(diffs);
  o.result["d_squared_zero"] = true;  // be_complex throws otherwise
  try {
    Json h = Json::array();
    for (bool v : kitt::complex_homology(c)) h.push_back(v);
    o.result["homology_vanishes"] = std::move(h);
  } catch (const DomainError& e) {
    o.result["homology_vanishes"] = std::string("skipped: ") + e.what();
  }
  return o;
}

ExtElement random_witness(const RingPtr& ring, std::size_t rank, std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<int> coeff(1, 9);
  ExtElement w(ring, rank, degree);
  for (IndexSet l : kitt::index_subsets(rank, degree)) {
    if (eng() % 2) w.add_term(l, Polynomial::from_int(ring, coeff(eng)));
  }
  if (w.is_zero()) w.add_term(kitt::index_subsets(rank, degree).front(), Polynomial::from_int(ring, 1));
  return w;
}

Outcome cmd_lift(const Problem& p, const Options& opt) {
  auto phi = linear_map(p);
  const std::size_t d = degree_option(opt, p);
  const std::size_t deg = phi.g_rank() + d;
  if (d > phi.f_rank() - phi.g_rank()) throw DomainError("d must satisfy 0 <= d <= f - g");
  std::vector<ExtElement> witnesses;
  if (!opt.witness.empty()) {
    witnesses.push_back(parse_ext(opt.witness, p.ring, phi.f_rank(), deg));
  } else {
    for (IndexSet l : kitt::index_subsets(phi.f_rank(), deg)) witnesses.push_back(ExtElement::basis(p.ring, phi.f_rank(), l));
    witnesses.push_back(random_witness(p.ring, phi.f_rank(), deg, opt.seed));
  }
  Outcome o;
  o.result["d"] = d;
  Json list = Json::array();
  std::string convention;
  for (const auto& w : witnesses) {
    auto rep = kitt::lift_report(phi, d, w);
    convention = rep.convention;
    Json item;
    item["witness"] = w.to_string();
    item["ok"] = rep.ok;
    item["step_signs"] = rep.step_signs;
    item["terminal_sign"] = rep.terminal_sign;
    item["connecting_map"] = kitt::connecting_map(phi, d, w).to_string();
    list.push_back(std::move(item));
    o.verified = o.verified && rep.ok;
  }
  o.result["sign_convention"] = convention;
  o.result["lifts"] = std::move(list);
  return o;
}

void render_text(const Json& node, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  // numbers and booleans stay on one line
  auto inline_array = [](const Json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_number() || e.is_boolean(); });
  };
  auto flat = [](const Json& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].dump();
    return s + "]";
  };
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (inline_array(value)) {
        out << pad << key << ": " << flat(value) << "\n";
      } else if (value.is_structured() && !value.empty()) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << key << ": " << (value.is_structured() ? value.dump() : scalar(value)) << "\n";
      }
    }
  } else if (node.is_array()) {
    for (const auto& value : node) {
      if (value.is_structured() && !value.empty()) {
        out << pad << "-\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << "- " << (value.is_structured() ? value.dump() : scalar(value)) << "\n";
      }
    }
  } else {
    out << pad << scalar(node) << "\n";
  }
}

}  // namespace

Problem parse_problem(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = line_column(text, offset);
    std::string msg = e.what();
    const auto at = msg.find("syntax error");
    throw ParseError("invalid JSON: " + (at == std::string::npos ? msg : msg.substr(at)), line, col);
  }
  if (!doc.is_object()) throw DomainError("the document must be a JSON object");
  DocumentReader reader(text);
  if (!doc.contains("ring")) throw DomainError("missing field \"ring\"");
  Problem p;
  p.ring = parse_ring(doc["ring"], reader);
  if (doc.contains("I")) p.i = reader.polys(doc["I"], p.ring, "I");
  if (doc.contains("a")) p.a = reader.polys(doc["a"], p.ring, "a");
  if (doc.contains("phi")) {
    const Json& rows = doc["phi"];
    if (!rows.is_array()) throw DomainError("phi: expected an array of rows");
    const std::size_t r = p.i.size();
    const std::size_t s = p.a ? p.a->size() : 0;
    if (rows.size() != r) throw DomainError("phi: expected " + std::to_string(r) + " rows");
    PolyMatrix m(p.ring, r, s);
    for (std::size_t i = 0; i < r; ++i) {
      auto row = reader.polys(rows[i], p.ring, "phi[" + std::to_string(i) + "]");
      if (row.size() != s) throw DomainError("phi: row " + std::to_string(i) + " needs " + std::to_string(s) + " entries");
      for (std::size_t j = 0; j < s; ++j) m(i, j) = row[j];
    }
    p.phi = std::move(m);
  }
  if (doc.contains("matrix")) {
    const Json& m = doc["matrix"];
    if (!m.is_object() || !m.contains("rows") || !m.contains("cols") || !m.contains("entries") ||
        !m["rows"].is_number_unsigned() || !m["cols"].is_number_unsigned()) {
      throw DomainError("matrix: expected {rows, cols, entries}");
    }
    const auto rows = m["rows"].get<std::size_t>();
    const auto cols = m["cols"].get<std::size_t>();
    auto entries = reader.polys(m["entries"], p.ring, "matrix.entries");
    if (entries.size() != rows * cols) throw DomainError("matrix: expected rows*cols entries");
    p.matrix = PolyMatrix(p.ring, rows, cols, std::move(entries));
  }
  if (doc.contains("d")) {
    if (!doc["d"].is_number_unsigned()) throw DomainError("d: expected a non-negative integer");
    p.d = doc["d"].get<std::size_t>();
  }
  return p;
}

ExtElement parse_ext(const std::string& text, const RingPtr& ring, std::size_t rank, std::size_t degree) {
  // split at top-level + and - (not inside brackets, not after ^ or *)
  std::vector<std::pair<std::size_t, std::string>> terms;
  int depth = 0;
  std::size_t start = 0;
  char prev = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    const char ch = k < text.size() ? text[k] : '+';
    if (ch == '(' || ch == '{') ++depth;
    if (ch == ')' || ch == '}') --depth;
    const bool split = depth == 0 && (ch == '+' || ch == '-') && prev != '^' && prev != '*' && prev != 0;
    if (split || k == text.size()) {
      terms.emplace_back(start, text.substr(start, k - start));
      start = k;
    }
    if (ch != ' ' && ch != '\t') prev = ch;
  }
  static const std::regex basis(R"(^\s*([+-]?)\s*(.*?)\s*\*?\s*e(\d+|\{[\d,\s]*\})\s*$)");
  ExtElement out(ring, rank, degree);
  for (const auto& [offset, term] : terms) {
    std::smatch m;
    if (!std::regex_match(term, m, basis)) {
      throw ParseError("witness term \"" + term + "\" must end in a basis symbol e<k> or e{k,..}", 1, offset + 1);
    }
    std::string idx = m[3].str();
    std::vector<std::size_t> elems;
    std::string digits;
    for (char ch : idx + ",") {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits += ch;
      } else if (ch == ',' && !digits.empty()) {
        const auto v = std::stoul(digits);
        if (v < 1 || v > rank) throw ParseError("basis index " + digits + " out of range", 1, offset + 1);
        elems.push_back(v - 1);
        digits.clear();
      }
    }
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end() || elems.size() != degree) {
      throw ParseError("witness term needs " + std::to_string(degree) + " distinct indices", 1, offset + 1);
    }
    std::string coeff_text = m[2].str();
    while (!coeff_text.empty() && (coeff_text.back() == '*' || coeff_text.back() == ' ')) coeff_text.pop_back();
    Polynomial c = coeff_text.empty() ? Polynomial::from_int(ring, 1) : [&] {
      try {
        return kitt::parse_poly(coeff_text, ring);
      } catch (const ParseError& e) {
        throw ParseError("witness coefficient: " + std::string(e.what()), 1,
                         offset + static_cast<std::size_t>(m.position(2)) + e.column());
      }
    }();
    if (m[1].str() == "-") c = -c;
    out.add_term(kitt::index_set_of(elems), c);
  }
  return out;
}

std::vector<Polynomial> sorted_generators(std::vector<Polynomial> gens) {
  auto less = [](const Polynomial& a, const Polynomial& b) {
    const auto& order = a.ring()->order();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t k = 0; k < ta.size() && k < tb.size(); ++k) {
      const int c = order.compare(ta[k].mono, tb[k].mono);
      if (c != 0) return c > 0;
      const auto sa = a.field().to_string(ta[k].coeff);
      const auto sb = b.field().to_string(tb[k].coeff);
      if (sa != sb) return sa < sb;
    }
    return ta.size() > tb.size();
  };
  std::sort(gens.begin(), gens.end(), less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residual intersections, Kitt ideals and Buchsbaum-Eisenbud complexes", "kittc"};
  Options opt;
  std::string input;
  std::string format = "json";
  bool timing = false;
  const std::vector<std::string> commands{"kitt", "colon", "fitt", "koszul", "verify", "specialize", "en", "lift"};
  app.add_option("command", opt.command, "kitt | colon | fitt | koszul | verify | specialize | en | lift")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("input", input, "problem document (JSON), - for standard input")->required();
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_flag("--timing", timing, "report wall time");
  app.add_flag("--expect-equal", opt.expect_equal, "verify: fail with exit 2 unless Kitt = a:I");
  app.add_option("--homology", opt.homology, "koszul: homology representatives in degree i");
  app.add_option("--cycles", opt.cycles, "koszul: cycle generators in degree i");
  app.add_option("--d", opt.d, "en, lift: family index d");
  app.add_option("--f0", opt.f0, "specialize: element of a to factor out");
  app.add_option("--witness", opt.witness, "lift: exterior element such as \"x*e{1,2} - e{1,3}\"");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Json doc;
  doc["command"] = opt.command;
  int code = 0;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::string text;
    if (input == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(input);
      if (!in) throw DomainError("cannot read " + input);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    Problem p = parse_problem(text);
    if (p.i.empty() && (opt.command != "en" && opt.command != "lift")) throw DomainError("missing field \"I\"");
    Outcome o;
    if (opt.command == "kitt") o = cmd_kitt(p);
    else if (opt.command == "colon") o = cmd_colon(p);
    else if (opt.command == "fitt") o = cmd_fitt(p);
    else if (opt.command == "koszul") o = cmd_koszul(p, opt);
    else if (opt.command == "verify") o = cmd_verify(p, opt);
    else if (opt.command == "specialize") o = cmd_specialize(p, opt);
    else if (opt.command == "en") o = cmd_en(p, opt);
    else o = cmd_lift(p, opt);
    doc["status"] = "ok";
    doc["verified"] = o.verified;
    doc["result"] = std::move(o.result);
    code = o.verified ? 0 : 2;
  } catch (const ParseError& e) {
    doc["status"] = "error";
    doc["error"] = {{"kind", "parse"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}};
    code = 1;
  } catch (const kitt::Error& e) {
    doc["status"] = "error";
    doc["error"] = {{"kind", "engine"}, {"message", e.what()}};
    code = 1;
  }
  if (timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    doc["timing_ms"] = ms;
  }
  if (format == "json") out << doc.dump(2) << "\n";
  else render_text(doc, out, 0);
  if (code == 1) err << "kittc: " << doc["error"]["message"].get<std::string>() << "\n";
  return code;
}

}  // namespace kittc
