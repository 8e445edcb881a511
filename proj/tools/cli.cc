#include "cli.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lcpbound/bounds.h"
#include "lcpbound/decomp.h"
#include "lcpbound/errors.h"
#include "lcpbound/lcp.h"
#include "lcpbound/matcore.h"
#include "lcpbound/verify.h"

namespace lcpbound::cli {
namespace {

using nlohmann::json;

constexpr double kDominanceSlack = 1e-9;

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines split on whitespace. Views point into `storage`.
std::vector<Line> ContentLines(std::istream& in, std::vector<std::string>& storage) {
  storage.clear();
  std::string text;
  std::vector<std::size_t> numbers;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    storage.push_back(std::move(text));
    numbers.push_back(number);
  }
  std::vector<Line> lines;
  for (std::size_t k = 0; k < storage.size(); ++k) {
    Line line{numbers[k], {}};
    std::string_view rest = storage[k];
    while (true) {
      const auto b = rest.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) break;
      rest.remove_prefix(b);
      const auto e = rest.find_first_of(" \t\r");
      line.tokens.push_back(rest.substr(0, e));
      if (e == std::string_view::npos) break;
      rest.remove_prefix(e);
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

double ParseNumber(std::string_view token, std::size_t line) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ParseError(line, "not a number: '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, "non-finite value: '" + std::string(token) + "'");
  }
  return value;
}

std::size_t ParseDimension(const Line& line) {
  if (line.tokens.size() != 1) {
    throw ParseError(line.number, "expected a single dimension n");
  }
  const std::string_view t = line.tokens[0];
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
  if (ec != std::errc() || ptr != t.data() + t.size() || n == 0) {
    throw ParseError(line.number, "dimension must be a positive integer");
  }
  return n;
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

std::string Sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// JSON numbers carry 12 significant digits.
double J(double v) { return std::stod(Sig(v, 12)); }

json JVec(std::span<const double> v) {
  json a = json::array();
  for (double x : v) a.push_back(J(x));
  return a;
}

json JMat(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) a.push_back(JVec(m.row(i)));
  return a;
}

std::string TVec(std::span<const double> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += Sig(v[i], 6);
  }
  return s;
}

void TMat(std::ostream& out, const std::string& name, const Matrix& m) {
  out << name << ":\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < m.size(); ++j) {
      out << std::setw(12) << Sig(m(i, j), 6);
    }
    out << '\n';
  }
}

const char* Bool(bool b) { return b ? "true" : "false"; }

Matrix LoadMatrix(const RunConfig& c) {
  if (!c.matrix_path) throw std::invalid_argument("--matrix is required");
  if (*c.matrix_path == "-") return parse_matrix(std::cin);
  return parse_matrix_file(*c.matrix_path);
}

json ProfileJson(const BetaProfile& p) {
  return json{{"beta", J(p.beta)},
              {"beta_i", JVec(p.beta_i)},
              {"beta_tilde", JVec(p.beta_tilde)},
              {"l", JVec(p.l)},
              {"beta_bar", JVec(p.beta_bar)}};
}

json BoundsJson(const BoundReport& r) {
  return json{{"n", r.n},          {"is_b", true},
              {"gp", J(r.gp)},     {"li2016", J(r.li2016)},
              {"wcdd", J(r.wcdd)}, {"new", J(r.new_bound)},
              {"profile", ProfileJson(r.profile)}};
}

void PrintBoundsTable(std::ostream& out, const BoundReport& r) {
  out << "n        " << r.n << '\n'
      << "gp       " << Sig(r.gp, 6) << '\n'
      << "li2016   " << Sig(r.li2016, 6) << '\n'
      << "wcdd     " << Sig(r.wcdd, 6) << '\n'
      << "new      " << Sig(r.new_bound, 6) << '\n'
      << "beta        " << Sig(r.profile.beta, 6) << '\n'
      << "beta_i      " << TVec(r.profile.beta_i) << '\n'
      << "beta_tilde  " << TVec(r.profile.beta_tilde) << '\n'
      << "l           " << TVec(r.profile.l) << '\n'
      << "beta_bar    " << TVec(r.profile.beta_bar) << '\n';
}

int RequireB(const Matrix& m, std::ostream& err) {
  if (is_b_matrix(m)) return kExitOk;
  err << "error: input is not a B-matrix\n";
  return kExitClass;
}

int RunCheck(const RunConfig& c, std::ostream& out) {
  const Matrix m = LoadMatrix(c);
  const ClassReport r = classify(m);
  if (c.output_format == OutputFormat::kJson) {
    json j{{"n", m.size()},   {"is_z", r.is_z}, {"is_sdd", r.is_sdd},
           {"is_m", r.is_m},  {"is_p", nullptr}, {"is_b", r.is_b}};
    if (r.is_p) j["is_p"] = *r.is_p;
    out << j.dump() << '\n';
  } else {
    out << "n       " << m.size() << '\n'
        << "is_z    " << Bool(r.is_z) << '\n'
        << "is_sdd  " << Bool(r.is_sdd) << '\n'
        << "is_m    " << Bool(r.is_m) << '\n'
        << "is_p    " << (r.is_p ? Bool(*r.is_p) : "n/a") << '\n'
        << "is_b    " << Bool(r.is_b) << '\n';
  }
  return r.is_b ? kExitOk : kExitClass;
}

int RunDecompose(const RunConfig& c, std::ostream& out) {
  const Matrix m = LoadMatrix(c);
  const BPlusDecomposition d = bplus_decompose(m);
  if (c.output_format == OutputFormat::kJson) {
    out << json{{"n", m.size()},
                {"b_plus", JMat(d.b_plus)},
                {"c", JMat(d.c)},
                {"r_plus", JVec(d.r_plus)}}
               .dump()
        << '\n';
  } else {
    TMat(out, "B+", d.b_plus);
    TMat(out, "C", d.c);
    out << "r+: " << TVec(d.r_plus) << '\n';
  }
  return kExitOk;
}

int RunBounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Matrix m = LoadMatrix(c);
  if (int code = RequireB(m, err)) return code;
  const BoundReport r = compute_bounds(m);
  if (c.output_format == OutputFormat::kJson) {
    out << BoundsJson(r).dump() << '\n';
  } else {
    PrintBoundsTable(out, r);
  }
  return kExitOk;
}

int RunVerify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Matrix m = LoadMatrix(c);
  if (int code = RequireB(m, err)) return code;
  const BoundReport r = compute_bounds(m);
  const MaxEstimate est =
      estimate_max(m, static_cast<std::size_t>(c.samples), c.seed);
  const double sampled = est.best.norm_value;

  std::vector<std::string> exceeded;
  const std::pair<const char*, double> named[] = {
      {"gp", r.gp}, {"li2016", r.li2016}, {"wcdd", r.wcdd}, {"new", r.new_bound}};
  for (const auto& [name, value] : named) {
    if (sampled > value + kDominanceSlack) exceeded.emplace_back(name);
  }

  if (c.output_format == OutputFormat::kJson) {
    json j = BoundsJson(r);
    j["sampled_max"] = J(sampled);
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["samples_evaluated"] = est.samples_evaluated;
    j["singular_encounters"] = est.singular_encounters;
    j["best_d"] = JVec(est.best.d);
    j["best_kind"] = to_string(est.best.kind);
    j["dominated"] = exceeded.empty();
    j["exceeded"] = exceeded;
    out << j.dump() << '\n';
  } else {
    PrintBoundsTable(out, r);
    out << "sampled_max          " << Sig(sampled, 6) << " (" << to_string(est.best.kind)
        << " d = " << TVec(est.best.d) << ")\n"
        << "seed                 " << c.seed << '\n'
        << "samples              " << c.samples << '\n'
        << "samples_evaluated    " << est.samples_evaluated << '\n'
        << "singular_encounters  " << est.singular_encounters << '\n';
    if (exceeded.empty()) {
      out << "verdict              all bounds dominate the sampled max\n";
    } else {
      out << "verdict              FALSIFIED:";
      for (const auto& e : exceeded) out << ' ' << e;
      out << '\n';
    }
  }
  return exceeded.empty() ? kExitOk : kExitFalsified;
}

int RunLcp(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Matrix m = LoadMatrix(c);
  if (!c.q_path) throw std::invalid_argument("--q is required");
  Vector q = *c.q_path == "-" ? parse_vector(std::cin) : parse_vector_file(*c.q_path);
  if (q.size() != m.size()) {
    err << "error: q has length " << q.size() << ", matrix has dimension "
        << m.size() << '\n';
    return kExitUsage;
  }
  if (int code = RequireB(m, err)) return code;
  const double bound = bound_new(m);
  const LcpProblem p(std::move(m), std::move(q));
  const ChenXiangReport rep = verify_chen_xiang(
      p, bound, static_cast<std::size_t>(c.samples), c.seed);
  const LcpSolution& s = rep.solution;

  if (c.output_format == OutputFormat::kJson) {
    out << json{{"n", p.size()},
                {"is_b", true},
                {"new", J(bound)},
                {"x_star", JVec(s.x_star)},
                {"w_star", JVec(s.w_star)},
                {"active_set", s.active_set},
                {"accepted_bases", s.accepted_bases},
                {"seed", c.seed},
                {"samples", c.samples},
                {"passed", rep.passed},
                {"failed", rep.failed},
                {"near_zero_residual", rep.near_zero_residual},
                {"worst_ratio", J(rep.worst_ratio)}}
               .dump()
        << '\n';
  } else {
    out << "x*              " << TVec(s.x_star) << '\n'
        << "w* = Mx* + q    " << TVec(s.w_star) << '\n'
        << "accepted bases  " << s.accepted_bases << '\n'
        << "bound (new)     " << Sig(bound, 6) << '\n'
        << "trials          " << rep.trials << " (seed " << rep.seed << ")\n"
        << "passed          " << rep.passed << '\n'
        << "failed          " << rep.failed << '\n'
        << "near-zero r(x)  " << rep.near_zero_residual << '\n'
        << "worst ratio     " << Sig(rep.worst_ratio, 6) << '\n';
  }
  return rep.failed == 0 ? kExitOk : kExitFalsified;
}

int RunReproduce(const RunConfig& c, std::ostream& out) {
  json rows = json::array();
  if (c.output_format == OutputFormat::kTable) {
    out << std::setw(4) << "k" << std::setw(12) << "gp" << std::setw(12)
        << "wcdd" << std::setw(16) << "li2016_direct" << std::setw(14)
        << "new_direct" << std::setw(26) << "li2016_paper_closed_form"
        << std::setw(23) << "new_paper_closed_form" << '\n';
  }
  for (int k = c.k_first; k <= c.k_last; ++k) {
    const Matrix m = example1_matrix(k);
    const BoundReport r = compute_bounds(m);
    const Example1ClosedForms cf = example1_closed_forms(k);
    if (c.output_format == OutputFormat::kJson) {
      rows.push_back(json{{"k", k},
                          {"gp", J(r.gp)},
                          {"wcdd", J(r.wcdd)},
                          {"li2016_direct", J(r.li2016)},
                          {"new_direct", J(r.new_bound)},
                          {"li2016_paper_closed_form", J(cf.li2016_paper)},
                          {"new_paper_closed_form", J(cf.new_paper)}});
    } else {
      out << std::setw(4) << k << std::setw(12) << Sig(r.gp, 6) << std::setw(12)
          << Sig(r.wcdd, 6) << std::setw(16) << Sig(r.li2016, 6)
          << std::setw(14) << Sig(r.new_bound, 6) << std::setw(26)
          << Sig(cf.li2016_paper, 6) << std::setw(23) << Sig(cf.new_paper, 6)
          << '\n';
    }
  }
  if (c.output_format == OutputFormat::kJson) {
    out << json{{"rows", rows}}.dump() << '\n';
  }
  return kExitOk;
}

int RunGen(const RunConfig& c, std::ostream& out) {
  if (!c.n) throw std::invalid_argument("--n is required for gen");
  write_matrix(out, gen_b_matrix(*c.n, c.seed));
  return kExitOk;
}

}  // namespace

Matrix parse_matrix(std::istream& in) {
  std::vector<std::string> storage;
  const std::vector<Line> lines = ContentLines(in, storage);
  if (lines.empty()) throw ParseError(1, "empty matrix file");
  const std::size_t n = ParseDimension(lines[0]);

  std::vector<Vector> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const Line& line = lines[r];
    if (rows.size() == n) {
      throw DimensionError(line.number, "more than " + std::to_string(n) + " rows");
    }
    if (line.tokens.size() != n) {
      throw DimensionError(line.number, "expected " + std::to_string(n) +
                                            " entries, found " +
                                            std::to_string(line.tokens.size()));
    }
    Vector row;
    for (std::string_view t : line.tokens) row.push_back(ParseNumber(t, line.number));
    rows.push_back(std::move(row));
  }
  if (rows.size() != n) {
    throw DimensionError(lines.back().number,
                         "expected " + std::to_string(n) + " rows, found " +
                             std::to_string(rows.size()));
  }
  return Matrix::FromRows(rows);
}

Matrix parse_matrix_file(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return parse_matrix(in);
}

Vector parse_vector(std::istream& in) {
  std::vector<std::string> storage;
  const std::vector<Line> lines = ContentLines(in, storage);
  if (lines.empty()) throw ParseError(1, "empty vector file");
  const std::size_t n = ParseDimension(lines[0]);
  Vector v;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    for (std::string_view t : lines[r].tokens) {
      if (v.size() == n) {
        throw DimensionError(lines[r].number, "more than " + std::to_string(n) + " entries");
      }
      v.push_back(ParseNumber(t, lines[r].number));
    }
  }
  if (v.size() != n) {
    throw DimensionError(lines.back().number,
                         "expected " + std::to_string(n) + " entries, found " +
                             std::to_string(v.size()));
  }
  return v;
}

Vector parse_vector_file(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return parse_vector(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out << ' ';
      out << Sig(m(i, j), 17);
    }
    out << '\n';
  }
}

std::optional<std::pair<int, int>> parse_k_range(const std::string& text) {
  auto parse_int = [](std::string_view s) -> std::optional<int> {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
  };
  const std::string_view t = text;
  const auto dots = t.find("..");
  std::optional<int> a, b;
  if (dots == std::string_view::npos) {
    a = b = parse_int(t);
  } else {
    a = parse_int(t.substr(0, dots));
    b = parse_int(t.substr(dots + 2));
  }
  if (!a || !b || *a < 1 || *b < *a) return std::nullopt;
  return std::pair{*a, *b};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.samples < 0) {
    err << "error: --samples must be >= 0\n";
    return kExitUsage;
  }
  try {
    switch (config.command) {
      case Command::kCheck:
        return RunCheck(config, out);
      case Command::kDecompose:
        return RunDecompose(config, out);
      case Command::kBounds:
        return RunBounds(config, out, err);
      case Command::kVerify:
        return RunVerify(config, out, err);
      case Command::kLcp:
        return RunLcp(config, out, err);
      case Command::kReproduce:
        return RunReproduce(config, out);
      case Command::kGen:
        return RunGen(config, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotApplicable& e) {
    err << "error: " << e.what() << '\n';
    return kExitClass;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lcpbound::cli
