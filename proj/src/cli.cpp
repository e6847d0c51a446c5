#include "hankel/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "hankel/errors.hpp"
#include "hankel/groebner.hpp"
#include "hankel/hankel_ideals.hpp"
#include "hankel/resolution.hpp"
#include "hankel/verifier.hpp"

namespace hankel {

using nlohmann::json;

namespace {

class SpecReader {
 public:
  explicit SpecReader(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int integer() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || value < 1) throw ParseError("integer out of range", start);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    return fallback;
  }
}

VerifierOptions verifier_options(const CommandConfig& config) {
  VerifierOptions opts;
  opts.field = config.field;
  opts.cm_max_vars = static_cast<std::size_t>(env_int("HANKEL_CM_MAX_VARS", static_cast<int>(opts.cm_max_vars)));
  opts.linear_max_vars =
      static_cast<std::size_t>(env_int("HANKEL_LINEAR_MAX_VARS", static_cast<int>(opts.linear_max_vars)));
  opts.regularity_max_vars =
      static_cast<std::size_t>(env_int("HANKEL_REGULARITY_MAX_VARS", static_cast<int>(opts.regularity_max_vars)));
  opts.threads = static_cast<unsigned>(std::max(0, env_int("HANKEL_THREADS", 0)));
  return opts;
}

json instance_json(const ClosedGraph& g1, const ClosedGraph& g2) {
  return json{{"g1", graph_json(g1)}, {"g2", graph_json(g2)}};
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "instance g1=" << r.g1.to_string() << " g2=" << r.g2.to_string() << '\n';
  for (const auto& c : r.checks) {
    os << "  " << to_string(c.status) << ' ' << c.name << " (" << c.paper_ref << ")";
    if (c.status != Status::pass) os << " claimed=" << c.claimed.dump() << " computed=" << c.computed.dump();
    os << '\n';
    if (!c.note.empty()) os << "    note: " << c.note << '\n';
  }
  for (const auto& s : r.skipped) os << "  skipped " << s << '\n';
  os << "status: " << to_string(r.status()) << '\n';
  return os.str();
}

std::string sweep_text(const SweepReport& s) {
  std::ostringstream os;
  const std::size_t total = s.reports.size() + (s.aborted_on ? 1 : 0);
  os << total << " instances";
  if (total > 0) {
    os << ": " << s.count(Status::pass) << " pass, " << s.count(Status::fail) << " fail, "
       << s.count(Status::flagged) << " flagged";
  }
  os << '\n';
  for (const auto& r : s.reports) {
    for (const auto& c : r.checks) {
      if (c.status == Status::flagged) {
        os << "flagged " << r.g1.to_string() << " x " << r.g2.to_string() << ": " << c.name << '\n';
      }
    }
    for (const auto& k : r.skipped) os << "skipped " << r.g1.to_string() << " x " << r.g2.to_string() << ": " << k << '\n';
  }
  if (s.aborted_on) os << "aborted on failing instance\n" << report_text(*s.aborted_on);
  return os.str();
}

std::string classification_text(const ClassificationReport& c) {
  std::ostringstream os;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "prime (claimed): " << yes(c.prime_claimed) << '\n';
  os << "minimal primes (claimed):";
  for (const auto& p : c.min_primes_claimed) os << ' ' << p;
  os << '\n';
  os << "radical (claimed): " << yes(c.radical_claimed);
  if (c.radical_computed) os << ", computed: " << yes(*c.radical_computed);
  os << '\n';
  if (c.radical_witness) os << "radical witness: " << *c.radical_witness << '\n';
  os << "linear resolution (claimed): " << yes(c.linear_resolution_claimed);
  if (c.linear_resolution_computed) os << ", computed: " << yes(*c.linear_resolution_computed);
  os << '\n';
  os << report_text(c.report);
  return os.str();
}

std::string to_output(const json& j) { return j.dump(2) + "\n"; }

struct Outcome {
  std::string text;
  Status status = Status::pass;
  std::size_t flagged = 0;
};

Outcome run_command(const CommandConfig& config) {
  const bool as_json = config.format == OutputFormat::json;
  if (config.command == "sweep") {
    const auto kinds = parse_check_kinds(config.check);
    const auto report = sweep(config.max_m, config.max_n, kinds, verifier_options(config));
    Outcome o;
    o.text = as_json ? to_output(report.to_json(config.timings)) : sweep_text(report);
    o.flagged = 0;
    for (const auto& r : report.reports) o.flagged += r.count(Status::flagged);
    o.status = report.aborted_on ? Status::fail : (o.flagged ? Status::flagged : Status::pass);
    return o;
  }

  const ClosedGraph g1 = parse_graph_spec(config.g1);
  const ClosedGraph g2 = parse_graph_spec(config.g2);
  Outcome o;

  if (config.command == "gen") {
    const Ideal pair = pair_ideal(g1, g2, config.field);
    const ClosedGraph g = combine(g1, g2);
    const Ideal scroll = scroll_ideal(g, config.field);
    json j{{"instance", instance_json(g1, g2)},
           {"field", config.field.name()},
           {"num_vars", pair.ring().num_vars},
           {"combined", graph_json(g)}};
    j["pair_generators"] = json::array();
    for (const auto& f : pair.generators()) j["pair_generators"].push_back(f.to_string(config.order));
    j["scroll_generators"] = json::array();
    for (const auto& f : scroll.generators()) j["scroll_generators"].push_back(f.to_string(config.order));
    if (as_json) {
      o.text = to_output(j);
    } else {
      std::ostringstream os;
      os << "combined graph: " << g.to_string() << " on " << g.vertex_count() << " vertices\n";
      os << "pair ideal (" << pair.generators().size() << " generators):\n";
      for (const auto& f : pair.generators()) os << "  " << f.to_string(config.order) << '\n';
      os << "scroll ideal (" << scroll.generators().size() << " generators):\n";
      for (const auto& f : scroll.generators()) os << "  " << f.to_string(config.order) << '\n';
      o.text = os.str();
    }
  } else if (config.command == "gb") {
    const Ideal pair = pair_ideal(g1, g2, config.field);
    const auto& gb = pair.groebner_basis(config.order);
    json j{{"instance", instance_json(g1, g2)},
           {"order", config.order.name()},
           {"field", config.field.name()},
           {"num_vars", pair.ring().num_vars},
           {"basis", gb.serialize()}};
    j["leading_monomials"] = json::array();
    for (const auto& m : gb.leading_monomials()) j["leading_monomials"].push_back(m.to_string());
    if (as_json) {
      o.text = to_output(j);
    } else {
      std::ostringstream os;
      os << "reduced Groebner basis (" << config.order.name() << ", " << gb.elements().size() << " elements):\n";
      for (const auto& s : gb.serialize()) os << "  " << s << '\n';
      o.text = os.str();
    }
  } else if (config.command == "betti") {
    BettiOptions opts;
    const auto table = graded_betti(pair_ideal(g1, g2, config.field), opts);
    if (as_json) {
      json j = table.to_json();
      j["instance"] = instance_json(g1, g2);
      j["field"] = config.field.name();
      o.text = to_output(j);
    } else {
      o.text = table.to_text();
      if (o.text.empty() || o.text.back() != '\n') o.text += '\n';
    }
  } else if (config.command == "classify") {
    const auto c = classify(g1, g2, verifier_options(config));
    o.text = as_json ? to_output(c.to_json(config.timings)) : classification_text(c);
    o.status = c.report.status();
    o.flagged = c.report.count(Status::flagged);
  } else if (config.command == "verify") {
    const auto r = run_checks(g1, g2, parse_check_kinds(config.check), verifier_options(config));
    o.text = as_json ? to_output(r.to_json(config.timings)) : report_text(r);
    o.status = r.status();
    o.flagged = r.count(Status::flagged);
  } else {
    throw std::invalid_argument("unknown command '" + config.command + "'");
  }
  return o;
}

}  // namespace

ClosedGraph parse_graph_spec(std::string_view spec) {
  SpecReader in(spec);
  if (in.peek() == 'K' || in.peek() == 'L') {
    const char kind = in.peek();
    in.expect(kind);
    const int n = in.integer();
    if (!in.done()) throw ParseError("unexpected trailing input", in.pos());
    return kind == 'K' ? ClosedGraph::complete(n) : ClosedGraph::line(n);
  }
  std::vector<Interval> facets;
  for (;;) {
    const std::size_t start = in.pos();
    Interval iv;
    iv.a = in.integer();
    in.expect('-');
    iv.b = in.integer();
    if (iv.b < iv.a) throw ParseError("interval end precedes its start", start);
    if (!facets.empty() && !(facets.back().a < iv.a && facets.back().b < iv.b)) {
      throw ParseError("intervals must be listed in increasing order", start);
    }
    facets.push_back(iv);
    if (in.done()) break;
    in.expect(',');
  }
  const int n = facets.back().b;
  return ClosedGraph::from_facets(n, std::move(facets));
}

Field parse_field(std::string_view text) {
  if (text == "rational") return Field::rationals();
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty() && p <= UINT32_MAX) {
      return Field::prime(static_cast<std::uint32_t>(p));
    }
  } else if (text == "prime") {
    return Field::prime(Field::kDefaultPrime);
  }
  throw std::invalid_argument("field must be 'rational' or 'prime:P', got '" + std::string(text) + "'");
}

MonomialOrder parse_order(std::string_view text) {
  if (text == "degrevlex") return MonomialOrder::degrevlex();
  if (text == "lex") return MonomialOrder::lex();
  throw std::invalid_argument("order must be 'degrevlex' or 'lex', got '" + std::string(text) + "'");
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << contents;
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw std::runtime_error("cannot rename into " + path + ": " + ec.message());
  }
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  Outcome o;
  try {
    o = run_command(config);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MalformedFacets& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }

  if (config.out_path) {
    try {
      write_atomically(*config.out_path, o.text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitFail;
    }
  } else {
    out << o.text;
    out.flush();
  }

  if (o.status == Status::fail) {
    err << "error: at least one check failed\n";
    return kExitFail;
  }
  if (o.flagged > 0) err << "warning: " << o.flagged << " flagged check(s); see report notes\n";
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hankel binomial ideals of pairs of closed graphs", "hankel"};
  app.require_subcommand(1);

  CommandConfig config;
  std::string order = "degrevlex";
  std::string field = "rational";
  std::string format = "json";
  std::string out_path;
  bool no_timings = false;

  auto common = [&](CLI::App* sub, bool needs_graphs) {
    if (needs_graphs) {
      sub->add_option("--g1", config.g1, "first graph: K<n>, L<n> or a-b,c-d,...")->required();
      sub->add_option("--g2", config.g2, "second graph")->required();
    }
    sub->add_option("--order", order, "degrevlex or lex")->capture_default_str();
    sub->add_option("--field", field, "rational or prime:P")->capture_default_str();
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--out", out_path, "write the report to FILE");
    sub->add_flag("--no-timings", no_timings, "omit timings from JSON reports");
  };

  common(app.add_subcommand("gen", "list generators of the pair and combined-graph ideals"), true);
  common(app.add_subcommand("gb", "reduced Groebner basis of the pair ideal"), true);
  common(app.add_subcommand("classify", "primality, minimal primes, radicality and linearity"), true);
  common(app.add_subcommand("betti", "graded Betti numbers of S/I"), true);
  auto* verify = app.add_subcommand("verify", "run checks on one instance");
  common(verify, true);
  verify->add_option("--check", config.check, "thm1.1, corollary, prop2.1, thm2.3, prop2.4 or all")
      ->capture_default_str();
  auto* sweep_cmd = app.add_subcommand("sweep", "run checks over all pairs of connected closed graphs");
  common(sweep_cmd, false);
  sweep_cmd->add_option("--max-m", config.max_m, "largest first vertex count")->capture_default_str();
  sweep_cmd->add_option("--max-n", config.max_n, "largest second vertex count")->capture_default_str();
  sweep_cmd->add_option("--check", config.check, "checks to run")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    if (sub->parsed()) config.command = sub->get_name();
  }
  try {
    config.order = parse_order(order);
    config.field = parse_field(field);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  config.format = format == "text" ? OutputFormat::text : OutputFormat::json;
  if (!out_path.empty()) config.out_path = out_path;
  config.timings = !no_timings;
  return run(config, out, err);
}

}  // namespace hankel
