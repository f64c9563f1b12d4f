#include "dgexcess/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dgexcess {
namespace {

using Json = nlohmann::ordered_json;

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t to_count(const std::string& tok, std::size_t line, const std::string& what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, what + " must be a non-negative integer, got '" + tok + "'");
  }
  return value;
}

Digraph parse_edgelist(const std::vector<Line>& lines, std::size_t last_line) {
  if (lines.empty()) throw ParseError(1, "missing header \"n m\"");
  const Line& header = lines[0];
  if (header.tokens.size() != 2) throw ParseError(header.number, "malformed header, expected \"n m\"");
  const std::size_t n = to_count(header.tokens[0], header.number, "vertex count");
  const std::size_t m = to_count(header.tokens[1], header.number, "arc count");
  if (n == 0) throw ParseError(header.number, "vertex count must be positive");

  std::vector<Arc> arcs;
  std::set<Arc> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (arcs.size() == m) throw ParseError(line.number, "trailing garbage after " + std::to_string(m) + " arcs");
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected \"u v\"");
    const Arc a{to_count(line.tokens[0], line.number, "vertex"), to_count(line.tokens[1], line.number, "vertex")};
    if (a.from >= n || a.to >= n) {
      throw ParseError(line.number, "vertex out of range [0," + std::to_string(n) + ")");
    }
    if (a.from == a.to) throw ParseError(line.number, "loop at vertex " + std::to_string(a.from));
    if (!seen.insert(a).second) {
      throw ParseError(line.number, "duplicate arc " + std::to_string(a.from) + " " + std::to_string(a.to));
    }
    arcs.push_back(a);
  }
  if (arcs.size() != m) {
    throw ParseError(last_line, "expected " + std::to_string(m) + " arcs, found " + std::to_string(arcs.size()));
  }
  return Digraph(n, std::move(arcs));
}

Digraph parse_adjmatrix(const std::vector<Line>& lines, std::size_t last_line) {
  if (lines.empty()) throw ParseError(1, "missing header \"n\"");
  const Line& header = lines[0];
  if (header.tokens.size() != 1) throw ParseError(header.number, "malformed header, expected \"n\"");
  const std::size_t n = to_count(header.tokens[0], header.number, "vertex count");
  if (n == 0) throw ParseError(header.number, "vertex count must be positive");
  if (lines.size() > n + 1) throw ParseError(lines[n + 1].number, "trailing garbage after " + std::to_string(n) + " rows");
  if (lines.size() < n + 1) {
    throw ParseError(last_line, "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    const Line& row = lines[u + 1];
    if (row.tokens.size() != n) {
      throw ParseError(row.number, "expected " + std::to_string(n) + " entries, found " + std::to_string(row.tokens.size()));
    }
    for (Vertex v = 0; v < n; ++v) {
      const std::string& tok = row.tokens[v];
      if (tok != "0" && tok != "1") throw ParseError(row.number, "entry '" + tok + "' is not 0 or 1");
      if (tok == "1") {
        if (u == v) throw ParseError(row.number, "loop at vertex " + std::to_string(u));
        arcs.push_back({u, v});
      }
    }
  }
  return Digraph(n, std::move(arcs));
}

Json json_rationals(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_fraction_string(x));
  return a;
}

Json json_quantities(const std::vector<Quantity>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

bool all_exact(const std::vector<Quantity>& xs) {
  for (const auto& x : xs)
    if (!x.is_exact()) return false;
  return true;
}

Json json_cycle(const CycleLength& c) { return c.is_finite() ? Json(c.value()) : Json("infinite"); }

Json json_verdict(const Verdict& v) {
  Json j;
  j["decision"] = v.decision;
  j["method"] = to_string(v.method);
  Json cert = Json::object();
  for (const auto& [k, val] : v.certificate) cert[k] = val;
  j["certificate"] = cert;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json json_projection(const ProjectionSum& p) {
  Json j;
  j["total"] = to_fraction_string(p.total);
  j["per_k"] = json_rationals(p.per_k);
  bool bound = true;
  for (bool b : p.per_k_bound) bound = bound && b;
  j["per_k_within_delta"] = bound;
  return j;
}

std::string verdict_key(const std::string& property) {
  std::string k = property;
  for (char& c : k)
    if (c == '-') c = '_';
  return k;
}

}  // namespace

InputFormat parse_format(const std::string& name) {
  if (name == "edgelist") return InputFormat::edgelist;
  if (name == "adjmatrix") return InputFormat::adjmatrix;
  throw std::invalid_argument("unknown input format: " + name);
}

std::string to_string(InputFormat f) { return f == InputFormat::edgelist ? "edgelist" : "adjmatrix"; }

Digraph parse_text(const std::string& text, InputFormat format) {
  const auto lines = tokenize(text);
  std::size_t last_line = 1;
  for (char c : text) last_line += c == '\n';
  if (!text.empty() && text.back() == '\n') --last_line;
  return format == InputFormat::edgelist ? parse_edgelist(lines, last_line) : parse_adjmatrix(lines, last_line);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Digraph parse_input(const std::string& path, InputFormat format) { return parse_text(read_file(path), format); }

std::string write_edgelist(const Digraph& g) {
  std::string s = std::to_string(g.order()) + " " + std::to_string(g.arc_count()) + "\n";
  for (const Arc& a : g.arcs()) s += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
  return s;
}

std::string report_json(const AnalysisReport& r) {
  Json j;
  j["input"] = {{"n", r.n}, {"arcs", r.arc_count}, {"format", r.format}, {"hash", r.hash}};
  j["strongly_connected"] = r.strongly_connected;
  if (r.connected) {
    const ConnectedReport& c = *r.connected;
    j["structure"] = {{"normal", c.normal},
                      {"regular", c.regular},
                      {"degree", c.degree ? Json(*c.degree) : Json(nullptr)},
                      {"symmetric", c.symmetric},
                      {"geodetic", c.geodetic},
                      {"bipartite", c.bipartite}};
    j["metric"] = {{"diameter", c.diameter},
                   {"d", c.d},
                   {"d_informational", c.d_informational},
                   {"d_hat", c.d_hat},
                   {"girth", json_cycle(c.girth)},
                   {"odd_girth", json_cycle(c.odd_girth)},
                   {"odd_girth_spectral", json_cycle(c.odd_girth_spectral)}};
    j["minimal_polynomial"] = json_rationals(c.minimal_polynomial.coeffs());
    if (c.spectrum) {
      const Spectrum& s = *c.spectrum;
      Json values = Json::array();
      for (const auto& ev : s.distinct) {
        values.push_back(
            {{"re", ev.value.re.to_string(12)}, {"im", ev.value.im.to_string(12)}, {"multiplicity", ev.multiplicity}});
      }
      Json sj;
      sj["eigenvalues"] = values;
      sj["lambda0"] = s.lambda0.exact ? s.lambda0.exact->get_str() : s.lambda0.value.to_string(12);
      sj["lambda0_exact"] = s.lambda0.exact.has_value();
      sj["clustered_count"] = s.clustered_count;
      sj["diagnostics"] = s.diagnostics;
      j["spectrum"] = sj;
    }
    j["delta"] = json_rationals(c.delta);
    j["delta_prime"] = json_rationals(c.delta_prime);
    j["eps"] = json_rationals(c.eps);

    Json ex;
    ex["simple_excess"] = to_fraction_string(c.simple_excess);
    ex["simple_excess_exact"] = true;
    ex["spectral_excess"] = to_fraction_string(c.spectral_excess);
    ex["spectral_excess_exact"] = true;
    if (c.weighted_excess) {
      ex["weighted_excess"] = c.weighted_excess->to_string();
      ex["weighted_excess_exact"] = c.weighted_excess->is_exact();
    }
    if (c.pi0) {
      ex["pi0_excess"] = c.pi0->to_string();
      ex["pi0_excess_exact"] = c.pi0->is_exact();
    }
    ex["d_greater_than_diameter"] = c.d_greater_than_diameter;
    j["excess"] = ex;

    if (c.hoffman) {
      Json h;
      if (c.hoffman->exact) {
        h["coefficients"] = json_rationals(c.hoffman->exact->coeffs());
      } else {
        Json a = Json::array();
        for (const auto& x : c.hoffman->numeric.coeffs()) a.push_back(x.to_string(12));
        h["coefficients"] = a;
      }
      h["exact"] = c.hoffman->is_exact();
      j["hoffman_polynomial"] = h;
      j["weighted"] = {{"tilde_delta", json_quantities(c.tilde_delta)},
                       {"tilde_delta_prime", json_quantities(c.tilde_delta_prime)},
                       {"exact", all_exact(c.tilde_delta) && all_exact(c.tilde_delta_prime)}};
    }

    j["bounds"] = {{"wdr_projection_sum", json_projection(c.wdr_sum)},
                   {"upper_projection_sum", json_projection(c.upper_sum)},
                   {"q_norm2", to_fraction_string(c.q_norm.value)},
                   {"q_norm2_equals_n", c.q_norm.equals_n}};

    Json verdicts;
    for (const auto& v : c.verdicts) verdicts[verdict_key(v.property)] = json_verdict(v);
    Json tri;
    if (c.trichotomy) {
      Json branches = Json::array();
      for (Branch b : *c.trichotomy) branches.push_back(to_string(b));
      tri["branches"] = branches;
    } else {
      tri["branches"] = nullptr;
      tri["error"] = c.trichotomy_error;
    }
    verdicts["trichotomy"] = tri;
    j["verdicts"] = verdicts;

    Json checks = Json::object();
    for (const auto& cc : c.crosschecks) {
      Json e{{"agree", cc.agree}};
      if (!cc.detail.empty()) e["detail"] = cc.detail;
      checks[cc.name] = e;
    }
    j["crosschecks"] = checks;
  }
  j["tolerances"] = {{"weighted", r.weighted_tol},
                     {"cluster", r.cluster_tol},
                     {"digits", r.configured_digits},
                     {"working_digits", r.working_digits}};
  j["errors"] = r.errors;
  return j.dump(2) + "\n";
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << key;
    for (std::size_t i = key.size(); i < 24; ++i) out << ' ';
    out << value << "\n";
  };
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  row("vertices", std::to_string(r.n));
  row("arcs", std::to_string(r.arc_count));
  row("hash", r.hash);
  row("strongly connected", yn(r.strongly_connected));
  if (!r.connected) {
    out << "not strongly connected; nothing further to report\n";
    return out.str();
  }
  const ConnectedReport& c = *r.connected;
  row("normal", yn(c.normal));
  row("regular", c.regular ? "yes (degree " + std::to_string(*c.degree) + ")" : "no");
  row("geodetic", yn(c.geodetic));
  row("bipartite", yn(c.bipartite));
  row("diameter D", std::to_string(c.diameter));
  row("d", std::to_string(c.d) + (c.d_informational ? " (informational, not normal)" : ""));
  row("D_hat", std::to_string(c.d_hat));
  row("girth", c.girth.to_string());
  row("odd girth", c.odd_girth.to_string());
  std::string mp;
  for (std::size_t k = c.minimal_polynomial.coeffs().size(); k-- > 0;) {
    const Rational& q = c.minimal_polynomial.coeffs()[k];
    if (is_zero(q)) continue;
    if (!mp.empty()) mp += sgn(q) > 0 ? " + " : " - ";
    else if (sgn(q) < 0) mp += "-";
    const Rational a = abs(q);
    if (a != 1 || k == 0) mp += to_plain_string(a);
    if (k >= 1) mp += "x";
    if (k >= 2) mp += "^" + std::to_string(k);
  }
  row("minimal polynomial", mp);
  if (c.spectrum) {
    const auto& s = *c.spectrum;
    row("lambda0", (s.lambda0.exact ? s.lambda0.exact->get_str() : s.lambda0.value.to_string(12)) +
                       (s.lambda0.exact ? " (exact)" : ""));
    std::string spec;
    for (const auto& ev : s.distinct) {
      if (!spec.empty()) spec += ", ";
      spec += ev.value.re.to_string(6);
      if (!ev.value.im.is_zero()) spec += (ev.value.im.sign() > 0 ? "+" : "") + ev.value.im.to_string(6) + "i";
      spec += "^" + std::to_string(ev.multiplicity);
    }
    row("spectrum", spec);
  }
  std::string deltas;
  for (std::size_t k = 0; k < c.delta.size(); ++k) deltas += (k ? ", " : "") + to_plain_string(c.delta[k]);
  row("delta_k", deltas);
  row("simple excess", to_plain_string(c.simple_excess));
  row("spectral excess", to_plain_string(c.spectral_excess));
  if (c.weighted_excess) {
    row("weighted excess", c.weighted_excess->to_plain_string() + (c.weighted_excess->is_exact() ? "" : " (numeric)"));
  }
  row("projection sum", to_plain_string(c.wdr_sum.total) + " (n = " + std::to_string(r.n) + ")");
  row("||Q_d||^2", to_plain_string(c.q_norm.value));
  for (const auto& v : c.verdicts) row("verdict " + v.property, yn(v.decision) + " [" + to_string(v.method) + "]");
  if (c.trichotomy) {
    std::string b;
    for (Branch br : *c.trichotomy) b += (b.empty() ? "" : ", ") + to_string(br);
    row("trichotomy", b);
  } else {
    row("trichotomy", c.trichotomy_error);
  }
  std::size_t disagreements = 0;
  for (const auto& cc : c.crosschecks) {
    if (cc.agree) continue;
    ++disagreements;
    out << "CROSS-CHECK FAILED: " << cc.name << (cc.detail.empty() ? "" : " (" + cc.detail + ")") << "\n";
  }
  row("cross-checks", std::to_string(c.crosschecks.size() - disagreements) + "/" +
                          std::to_string(c.crosschecks.size()) + " agree");
  for (const auto& e : r.errors) out << "error: " << e << "\n";

  const std::string se = to_plain_string(c.simple_excess);
  const std::string sp = to_plain_string(c.spectral_excess);
  const Verdict* dr = c.verdict("dr");
  if (c.simple_excess == c.spectral_excess) {
    out << "simple excess " << se << " = spectral excess " << sp;
    out << (dr && dr->decision ? " ⇒ distance-regular\n" : " but not normal ⇒ not distance-regular\n");
  } else {
    out << "simple excess " << se << " < spectral excess " << sp << " ⇒ not distance-regular\n";
  }
  return out.str();
}

void emit_report(const AnalysisReport& r, ReportFormat format, std::ostream& out) {
  out << (format == ReportFormat::json ? report_json(r) : report_text(r));
}

}  // namespace dgexcess
