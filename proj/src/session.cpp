#include "frobcheck/session.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <random>

#include "frobcheck/frobenius.hpp"
#include "frobcheck/ideal_algebra.hpp"
#include "frobcheck/parse.hpp"
#include "frobcheck/registry.hpp"

namespace frobcheck {

namespace {

using nlohmann::ordered_json;

struct Token {
  std::string text;
  std::size_t col;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Whitespace separated words; whitespace inside parentheses is kept.
std::vector<Token> tokenize(std::string_view s, std::size_t line, std::size_t col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    int depth = 0;
    while (i < s.size() && (depth > 0 || !is_space(s[i]))) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth < 0) throw ParseError("unbalanced ')'", line, col0 + i);
      ++i;
    }
    if (depth != 0) throw ParseError("unbalanced '('", line, col0 + start);
    out.push_back({std::string(s.substr(start, i - start)), col0 + start});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::size_t leading_spaces(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return i;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidArgument("not an integer: " + std::string(s));
  return v;
}

unsigned parse_unsigned(std::string_view s, std::string_view key) {
  std::int64_t v = parse_int(s);
  if (v < 0 || v > 100000) throw InvalidArgument(std::string(key) + " out of range: " + std::string(s));
  return static_cast<unsigned>(v);
}

// "name = rhs" split; `what` names the statement for messages.
std::pair<std::string, std::string_view> split_assignment(std::string_view rest, std::size_t line, std::size_t col,
                                                          std::string_view what) {
  auto eq = rest.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected '=' in " + std::string(what), line, col);
  std::string name(trim(rest.substr(0, eq)));
  if (!valid_name(name)) throw ParseError("invalid name '" + name + "'", line, col);
  return {name, rest.substr(eq + 1)};
}

ReportVerdict parse_verdict(std::string_view s) {
  if (s == "holds") return ReportVerdict::Holds;
  if (s == "fails") return ReportVerdict::Fails;
  if (s == "skipped") return ReportVerdict::Skipped;
  throw InvalidArgument("expect must be holds, fails or skipped");
}

ContainmentReport criterion_report(std::string tag, ordered_json params, const CriterionVerdict& v) {
  ContainmentReport r;
  r.theorem_tag = std::move(tag);
  r.params = std::move(params);
  switch (v.status) {
    case VerdictStatus::Confirmed:
      r.verdict = ReportVerdict::Holds;
      break;
    case VerdictStatus::Refuted:
      r.verdict = ReportVerdict::Fails;
      break;
    case VerdictStatus::Inconclusive:
      r.verdict = ReportVerdict::Skipped;
      r.reason = "inconclusive";
      break;
  }
  r.diagnostics["criterion"] = to_string(v.status);
  r.diagnostics["e_range"] = std::to_string(v.e_min) + ".." + std::to_string(v.e_max);
  ordered_json checks = ordered_json::object();
  for (const auto& [name, ok] : v.checks) checks[name] = ok;
  r.diagnostics["checks"] = checks;
  if (v.witness) r.diagnostics["splitting_element"] = v.witness->to_string();
  if (!v.notes.empty()) r.diagnostics["notes"] = v.notes;
  return r;
}

const std::vector<std::string>& known_tags() {
  static const std::vector<std::string> tags = {
      "fpure-containment", "jacobian-fpure", "sfr-containment", "jacobian-sfr", "fpt-containment",
      "symbolic-into-ie",  "fedder",         "fpure",           "sfr",          "nu",
      "fpt"};
  return tags;
}

}  // namespace

std::vector<std::int64_t> parse_value_list(std::string_view text) {
  std::vector<std::int64_t> out;
  auto range = text.find("..");
  if (range != std::string_view::npos) {
    std::int64_t lo = parse_int(text.substr(0, range));
    std::int64_t hi = parse_int(text.substr(range + 2));
    if (hi < lo || hi - lo > 1000) throw InvalidArgument("bad range " + std::string(text));
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_int(trim(piece)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

GroebnerOptions parse_budget(std::string_view text, GroebnerOptions base) {
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    auto item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    start = comma == std::string_view::npos ? text.size() : comma + 1;
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("budget entries look like key=value");
    auto key = trim(item.substr(0, eq));
    std::int64_t v = parse_int(trim(item.substr(eq + 1)));
    if (v <= 0) throw InvalidArgument("budget values must be positive");
    auto value = static_cast<std::size_t>(v);
    if (key == "pairs")
      base.max_pairs = value;
    else if (key == "terms")
      base.max_terms = value;
    else if (key == "basis")
      base.max_basis = value;
    else
      throw InvalidArgument("unknown budget key " + std::string(key));
  }
  return base;
}

Session::Session(SessionOptions options) : options_(options) {}

bool Session::all_expectations_met() const {
  for (const auto& r : reports_)
    if (!r.matches_expectation()) return false;
  return true;
}

const AmbientRing& Session::ambient() const {
  if (!ambient_) throw InvalidArgument("no ring declared");
  return *ambient_;
}

const QuotientIdeal& Session::ideal(const std::string& name, std::size_t line) const {
  auto it = ideals_.find(name);
  if (it == ideals_.end()) throw InvalidArgument("line " + std::to_string(line) + ": unknown ideal " + name);
  return it->second;
}

PrimeData Session::prime_data(const std::string& name, std::size_t line) {
  const QuotientIdeal& Q = ideal(name, line);
  auto it = primes_.find(name);
  if (it == primes_.end() || (!it->second.monomial && it->second.specs.empty()))
    throw InvalidArgument("line " + std::to_string(line) + ": no primes declared for " + name);
  const PrimeDecl& decl = it->second;
  if (decl.monomial) {
    PrimeData pd = monomial_prime_data(Q);
    pd.assertions.fpure_quotient = decl.assertions.fpure_quotient;
    pd.assertions.sfr_quotient = decl.assertions.sfr_quotient;
    if (decl.local_generators) pd.local_generators = decl.local_generators;
    return pd;
  }
  PrimeData pd = make_prime_data(ambient(), decl.specs, decl.assertions, decl.local_generators);
  if (!pd.assertions.radical) {
    // Q is radical with these minimal primes exactly when it is their intersection.
    std::optional<QuotientIdeal> meet;
    for (const auto& c : pd.components) meet = meet ? q_intersect(*meet, c.prime) : c.prime;
    pd.assertions.radical = q_equal(*meet, Q);
  }
  return pd;
}

void Session::emit(ContainmentReport report, std::ostream& out) {
  if (options_.json)
    out << report.to_json(options_.timings).dump() << '\n';
  else
    out << report.to_text(options_.timings) << '\n';
  out.flush();
  reports_.push_back(std::move(report));
}

int Session::run(std::istream& script, std::ostream& out, std::ostream& err) {
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(script, text)) {
    ++line_no;
    try {
      execute(text, line_no, out);
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const InvalidArgument& e) {
      err << "error: line " << line_no << ": " << e.what() << '\n';
      return kExitUsage;
    } catch (const RingMismatch& e) {
      err << "error: line " << line_no << ": " << e.what() << '\n';
      return kExitUsage;
    } catch (const BudgetExceeded& e) {
      err << "budget exceeded: line " << line_no << ": " << e.what() << '\n';
      return kExitBudget;
    } catch (const ExponentOverflow& e) {
      err << "budget exceeded: line " << line_no << ": " << e.what() << '\n';
      return kExitBudget;
    } catch (const Error& e) {
      err << "error: line " << line_no << ": " << e.what() << '\n';
      return kExitExpectation;
    }
  }
  return all_expectations_met() ? kExitOk : kExitExpectation;
}

void Session::execute(std::string_view text, std::size_t line, std::ostream& out) {
  auto hash = text.find('#');
  if (hash != std::string_view::npos) text = text.substr(0, hash);
  std::size_t lead = leading_spaces(text);
  std::string_view body = text.substr(lead);
  if (trim(body).empty()) return;
  std::size_t kw_end = 0;
  while (kw_end < body.size() && !is_space(body[kw_end])) ++kw_end;
  std::string keyword(body.substr(0, kw_end));
  std::string_view rest = body.substr(kw_end);
  std::size_t col = lead + kw_end + 1;
  col += leading_spaces(rest);
  rest = trim(rest);

  if (keyword == "ring")
    do_ring(rest, line, col);
  else if (keyword == "hypersurface")
    do_hypersurface(rest, line, col);
  else if (keyword == "ideal")
    do_ideal(rest, line, col);
  else if (keyword == "primes")
    do_primes(rest, line, col);
  else if (keyword == "separator")
    do_separator(rest, line, col);
  else if (keyword == "assert-fpure" || keyword == "assert-sfr" || keyword == "assert-finite-pd")
    do_assert(keyword, rest, line);
  else if (keyword == "symbolic")
    do_symbolic(rest, line, col, out);
  else if (keyword == "check")
    do_check(rest, line, col, out);
  else if (keyword == "example")
    do_example(rest, line, col, out);
  else
    throw ParseError("unknown statement '" + keyword + "'", line, lead + 1);
}

void Session::do_ring(std::string_view rest, std::size_t line, std::size_t col) {
  ambient_ = AmbientRing::regular(parse_ring(rest, {line, col}), options_.budget);
  ideals_.clear();
  primes_.clear();
}

void Session::do_hypersurface(std::string_view rest, std::size_t line, std::size_t col) {
  const Ring ring = ambient().ring();
  ambient_ = AmbientRing::hypersurface(parse_poly(ring, rest, {line, col}), options_.budget);
  ideals_.clear();
  primes_.clear();
}

void Session::do_ideal(std::string_view rest, std::size_t line, std::size_t col) {
  auto [name, rhs] = split_assignment(rest, line, col, "ideal");
  if (ideals_.count(name)) throw InvalidArgument("ideal " + name + " already declared");
  std::size_t rcol = col + static_cast<std::size_t>(rhs.data() - rest.data());
  auto gens = parse_poly_list(ambient().ring(), rhs, {line, rcol});
  ideals_.emplace(name, q_ideal(ambient(), std::move(gens)));
}

void Session::do_primes(std::string_view rest, std::size_t line, std::size_t col) {
  auto [name, rhs] = split_assignment(rest, line, col, "primes");
  ideal(name, line);
  PrimeDecl& decl = primes_[name];
  decl.specs.clear();
  decl.monomial = false;
  std::size_t rcol = col + static_cast<std::size_t>(rhs.data() - rest.data());
  if (trim(rhs) == "monomial") {
    decl.monomial = true;
    return;
  }
  std::size_t start = 0;
  while (start <= rhs.size()) {
    auto semi = rhs.find(';', start);
    std::string_view piece = rhs.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    auto tokens = tokenize(piece, line, rcol + start);
    if (tokens.empty() || tokens[0].text.front() != '(')
      throw ParseError("expected a parenthesized prime", line, rcol + start);
    PrimeSpec spec;
    spec.generators = parse_poly_list(ambient().ring(), tokens[0].text, {line, tokens[0].col});
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const std::string& opt = tokens[t].text;
      if (opt == "bundle") {
        spec.bundle = true;
      } else if (opt.rfind("height=", 0) == 0) {
        spec.height = parse_unsigned(opt.substr(7), "height");
      } else if (opt.rfind("local=", 0) == 0) {
        decl.local_generators = parse_unsigned(opt.substr(6), "local");
      } else {
        throw ParseError("unknown prime option '" + opt + "'", line, tokens[t].col);
      }
    }
    decl.specs.push_back(std::move(spec));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
}

void Session::do_separator(std::string_view rest, std::size_t line, std::size_t col) {
  auto tokens = tokenize(rest, line, col);
  if (tokens.size() < 2) throw ParseError("expected: separator <ideal> <index> = <poly> | auto", line, col);
  const std::string& name = tokens[0].text;
  ideal(name, line);
  auto it = primes_.find(name);
  if (it == primes_.end() || it->second.specs.empty())
    throw InvalidArgument("no primes declared for " + name);
  auto& specs = it->second.specs;
  if (tokens[1].text == "auto") {
    if (specs.size() != 1) throw InvalidArgument("separator auto needs exactly one listed prime");
    if (ambient().is_hypersurface()) throw InvalidArgument("separator auto needs a polynomial ring");
    Ideal P(ambient().ring(), specs[0].generators, ambient().options());
    unsigned codim = specs[0].height ? *specs[0].height
                                     : static_cast<unsigned>(ambient().ring().num_vars()) -
                                           static_cast<unsigned>(krull_dimension(P));
    std::mt19937_64 rng(options_.seed);
    auto s = singular_locus_separator(P, codim, rng);
    if (!s) throw InvalidArgument("no separator found for " + name);
    specs[0].separator = *s;
    return;
  }
  std::size_t index = parse_unsigned(tokens[1].text, "index");
  if (index == 0 || index > specs.size()) throw InvalidArgument("prime index out of range");
  auto eq = rest.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected '=' in separator", line, col);
  specs[index - 1].separator = parse_poly(ambient().ring(), rest.substr(eq + 1), {line, col + eq + 1});
}

void Session::do_assert(const std::string& keyword, std::string_view rest, std::size_t line) {
  std::string name(trim(rest));
  ideal(name, line);
  Assertions& a = primes_[name].assertions;
  if (keyword == "assert-fpure")
    a.fpure_quotient = true;
  else if (keyword == "assert-sfr")
    a.sfr_quotient = true;
  else
    a.finite_pd = true;
}

void Session::do_symbolic(std::string_view rest, std::size_t line, std::size_t col, std::ostream& out) {
  auto tokens = tokenize(rest, line, col);
  if (tokens.size() != 2 || tokens[1].text.rfind("n=", 0) != 0)
    throw ParseError("expected: symbolic <ideal> n=<N>", line, col);
  const std::string& name = tokens[0].text;
  unsigned n = parse_unsigned(tokens[1].text.substr(2), "n");
  const QuotientIdeal& Q = ideal(name, line);
  PrimeData pd = prime_data(name, line);
  SymbolicStrategy s = choose_strategy(Q, pd);
  SymbolicPower sp = symbolic_power(Q, n, pd, s);
  if (options_.json) {
    ordered_json j;
    j["statement"] = "symbolic";
    j["ideal"] = name;
    j["n"] = n;
    j["strategy"] = to_string(s);
    j["generators"] = sp.ideal.to_string();
    out << j.dump() << '\n';
  } else {
    out << name << "^(" << n << ") = " << sp.ideal.to_string() << '\n';
  }
}

void Session::do_check(std::string_view rest, std::size_t line, std::size_t col, std::ostream& out) {
  auto tokens = tokenize(rest, line, col);
  if (tokens.size() < 2) throw ParseError("expected: check <tag> <ideal> key=value ...", line, col);
  const std::string tag = tokens[0].text;
  bool known = false;
  for (const auto& t : known_tags()) known = known || t == tag;
  if (!known) throw ParseError("unknown check '" + tag + "'", line, tokens[0].col);
  const std::string& name = tokens[1].text;
  const QuotientIdeal& Q = ideal(name, line);

  std::map<std::string, std::string> kv;
  for (std::size_t t = 2; t < tokens.size(); ++t) {
    auto eq = tokens[t].text.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", line, tokens[t].col);
    kv[tokens[t].text.substr(0, eq)] = tokens[t].text.substr(eq + 1);
  }
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto need_unsigned = [&](const std::string& key, std::optional<unsigned> fallback) -> unsigned {
    auto v = take(key);
    if (v) return parse_unsigned(*v, key);
    if (!fallback) throw InvalidArgument("check " + tag + " needs " + key + "=");
    return *fallback;
  };
  const Coeff p = ambient().ring().characteristic();
  const unsigned e_default_max = options_.e_max ? options_.e_max : default_e_max(p);
  std::optional<ReportVerdict> expect;
  if (auto v = take("expect")) expect = parse_verdict(*v);

  ContainmentReport report;
  if (tag == "fpure-containment" || tag == "jacobian-fpure") {
    unsigned n = need_unsigned("n", std::nullopt);
    report = check_fpure_containment(Q, prime_data(name, line), n, tag == "jacobian-fpure");
  } else if (tag == "sfr-containment" || tag == "jacobian-sfr") {
    unsigned n = need_unsigned("n", std::nullopt);
    report = check_sfr_containment(Q, prime_data(name, line), n, tag == "jacobian-sfr");
  } else if (tag == "fpt-containment") {
    unsigned n = need_unsigned("n", std::nullopt);
    unsigned e_max = need_unsigned("emax", e_default_max);
    std::optional<unsigned> floor;
    if (auto v = take("floor"); v && *v != "auto") floor = parse_unsigned(*v, "floor");
    report = check_fpt_containment(Q, prime_data(name, line), n, floor, e_max);
  } else if (tag == "symbolic-into-ie") {
    unsigned n = need_unsigned("n", 1u);
    unsigned e = need_unsigned("e", 1u);
    report = check_symbolic_into_Ie(Q, prime_data(name, line), n, e);
  } else {
    ordered_json params;
    params["ring"] = ambient().describe();
    params["Q"] = Q.to_string();
    if (tag == "fedder") {
      if (ambient().is_hypersurface()) throw InvalidArgument("fedder works over a polynomial ring; use fpure");
      unsigned e = need_unsigned("e", 1u);
      params["e"] = e;
      report = criterion_report(tag, params, fedder_is_fpure(Q.preimage(), e));
    } else if (tag == "fpure") {
      unsigned e = need_unsigned("e", 1u);
      params["e"] = e;
      auto it = primes_.find(name);
      bool finite_pd = !ambient().is_hypersurface() || (it != primes_.end() && it->second.assertions.finite_pd);
      report = criterion_report(tag, params, is_fpure_quotient(Q, e, finite_pd));
    } else if (tag == "sfr") {
      auto tests = take("tests");
      if (!tests) throw InvalidArgument("check sfr needs tests=(...)");
      unsigned e_max = need_unsigned("emax", e_default_max);
      params["emax"] = e_max;
      std::vector<Ideal> minimal;
      auto it = primes_.find(name);
      if (it != primes_.end())
        for (const auto& s : it->second.specs) minimal.push_back(q_ideal(ambient(), s.generators).preimage());
      auto cs = parse_poly_list(ambient().ring(), *tests, {line, col});
      report = criterion_report(tag, params, sfr_witness_search(Q, cs, e_max, minimal));
    } else if (tag == "nu") {
      unsigned e = need_unsigned("e", std::nullopt);
      params["e"] = e;
      int nu = nu_e(Q, e);
      report.theorem_tag = tag;
      report.params = params;
      report.diagnostics["nu"] = nu;
      report.summary = "nu_" + std::to_string(e) + "=" + std::to_string(nu);
      if (auto v = take("value")) {
        std::int64_t want = parse_int(*v);
        report.diagnostics["expected_nu"] = want;
        if (want != nu) report.verdict = ReportVerdict::Fails;
      }
    } else {
      unsigned e_max = need_unsigned("emax", e_default_max);
      params["emax"] = e_max;
      FptEstimate est = fpt_lower_bound(Q, e_max);
      report.theorem_tag = tag;
      report.params = params;
      ordered_json nus = ordered_json::array();
      for (const auto& [e, nu] : est.nu_values) nus.push_back({{"e", e}, {"nu", nu}});
      report.diagnostics["nu_values"] = nus;
      report.diagnostics["lower_bound"] = std::to_string(est.numerator) + "/" + std::to_string(est.denominator);
      report.diagnostics["floor"] = est.floor_lower_bound;
      report.diagnostics["superadditive"] = est.superadditive;
      for (const auto& [e, nu] : est.nu_values)
        report.summary += "nu_" + std::to_string(e) + "=" + std::to_string(nu) + ", ";
      report.summary += "floor " + std::to_string(est.floor_lower_bound);
      if (auto v = take("floor")) {
        unsigned want = parse_unsigned(*v, "floor");
        if (want != est.floor_lower_bound) report.verdict = ReportVerdict::Fails;
      }
    }
  }
  if (!kv.empty()) throw InvalidArgument("check " + tag + " does not take " + kv.begin()->first + "=");
  if (expect) report.expected = *expect;
  emit(std::move(report), out);
}

void Session::do_example(std::string_view rest, std::size_t line, std::size_t col, std::ostream& out) {
  auto tokens = tokenize(rest, line, col);
  if (tokens.empty()) throw ParseError("expected: example <id> key=value ...", line, col);
  ExampleParams params;
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    auto eq = tokens[t].text.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", line, tokens[t].col);
    params[tokens[t].text.substr(0, eq)] = parse_value_list(std::string_view(tokens[t].text).substr(eq + 1));
  }
  for (auto& r : run_example(tokens[0].text, params, options_.seed)) emit(std::move(r), out);
}

}  // namespace frobcheck
