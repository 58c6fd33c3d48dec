#include "cliffavg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffavg/averaging.hpp"
#include "cliffavg/commutation.hpp"
#include "cliffavg/projections.hpp"
#include "cliffavg/solver.hpp"
#include "cliffavg/textio.hpp"

namespace cliffavg {

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Signature parse_signature(const std::string& text, int max_dim) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--signature expects 'p,q'");
  const std::string p = trim(text.substr(0, comma));
  const std::string q = trim(text.substr(comma + 1));
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw UsageError("--signature expects nonnegative integers 'p,q', got '" + text + "'");
    }
    return std::stoi(s);
  };
  try {
    return Signature(number(p), number(q), max_dim);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct Context {
  Signature sig;
  bool json = false;
  std::istream& in;
  std::ostream& out;
  bool stdin_used = false;

  std::string read_arg(const std::string& arg) {
    if (arg != "-") return arg;
    if (stdin_used) throw UsageError("stdin can be read only once");
    stdin_used = true;
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  Multivector expr(const std::string& arg) { return parse_multivector(sig, trim(read_arg(arg))); }
  MultiIndex index(const std::string& arg) { return parse_multi_index(trim(arg), sig.dim()); }

  void emit(const Multivector& u) {
    if (json) {
      nlohmann::ordered_json j;
      j["result"] = format_multivector(u);
      out << j.dump() << '\n';
    } else {
      out << format_multivector(u) << '\n';
    }
  }

  int emit(const Solution& s) {
    if (json) {
      out << to_json(s) << '\n';
    } else if (s.kind == SolutionKind::Inconsistent) {
      out << "inconsistent\n";
      for (const auto& [a, r] : s.residuals) {
        out << "residual " << index_to_string(a, sig.dim()) << ": " << format_multivector(r) << '\n';
      }
    } else {
      out << format_multivector(*s.particular) << '\n';
      if (s.kind == SolutionKind::Coset) out << "free: " << freedom_name(s.freedom, sig.dim()) << '\n';
    }
    return s.kind == SolutionKind::Inconsistent ? kExitInconsistent : kExitOk;
  }
};

void expect_args(const std::vector<std::string>& pos, std::size_t count, const std::string& usage) {
  if (pos.size() != count) throw UsageError("usage: " + usage);
}

Rational parse_epsilon(const std::string& text) {
  Rational eps;
  try {
    eps = Rational::parse(trim(text));
  } catch (const std::invalid_argument&) {
    throw UsageError("EPS must be a rational number, got '" + text + "'");
  }
  if (eps.is_zero()) throw UsageError("EPS must be nonzero");
  return eps;
}

IndexSubset parse_subset(const Signature& sig, const std::string& text) {
  if (text == "all") return IndexSubset::all(sig);
  if (text == "even") return IndexSubset::even(sig);
  if (text == "odd") return IndexSubset::odd(sig);
  if (text.rfind("grade:", 0) == 0) return IndexSubset::of_grade(sig, std::stoi(text.substr(6)));
  if (text.rfind("qtype:", 0) == 0) return IndexSubset::of_quaternion_type(sig, std::stoi(text.substr(6)));
  std::vector<MultiIndex> members;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) members.push_back(parse_multi_index(trim(item), sig.dim()));
  return IndexSubset(sig, std::move(members));
}

SystemInstance read_system(Context& ctx, const Rational& eps, const std::string& path, bool zero_fill) {
  std::string content;
  if (path == "-") {
    content = ctx.read_arg("-");
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open rhs file '" + path + "'");
    content.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  std::map<MultiIndex, Multivector> rhs;
  std::istringstream lines(content);
  int line_no = 0;
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto colon = body.find(':');
    if (colon == std::string::npos) {
      throw UsageError("line " + std::to_string(line_no) + ": expected 'A: EXPR'");
    }
    try {
      const MultiIndex a = ctx.index(trim(body.substr(0, colon)));
      if (!rhs.emplace(a, parse_multivector(ctx.sig, trim(body.substr(colon + 1)))).second) {
        throw UsageError("line " + std::to_string(line_no) + ": duplicate multi-index");
      }
    } catch (const ParseError& e) {
      throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  for (MultiIndex a : enumerate_indices(ctx.sig)) {
    if (rhs.count(a)) continue;
    if (!zero_fill) {
      throw UsageError("rhs file has no line for multi-index " + index_to_string(a, ctx.sig.dim()) +
                       " (pass --zero-fill to default missing lines to 0)");
    }
    rhs.emplace(a, Multivector(ctx.sig));
  }
  return SystemInstance(ctx.sig, eps, rhs);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact averaging, projection and commutator-equation tools for real Clifford algebras Cl(p,q)",
               "cliffavg"};
  std::string signature;
  std::string output = "text";
  int max_dim = Signature::kDefaultMaxDim;
  app.add_option("--signature", signature, "metric signature as p,q")->required();
  app.add_option("--output", output, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-dim", max_dim, "cap on n = p + q")->check(CLI::Range(1, Signature::kHardMaxDim));
  app.require_subcommand(1);
  app.allow_extras();

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->allow_extras();
    s->fallthrough();
    return s;
  };
  CLI::App* mul = sub("mul", "geometric product: mul EXPR EXPR");
  CLI::App* avg = sub("avg", "averaging operator: avg [--set S | --adjoint first|last|even | --group vee] EXPR");
  CLI::App* project = sub("project", "projection: project [--grade k | --basis A | --center | --pair A] EXPR");
  CLI::App* conj = sub("conj", "conjugation (e^A)^{-1} U e^A: conj A EXPR");
  CLI::App* split = sub("split", "commuting / anticommuting parts w.r.t. e^A: split A EXPR");
  CLI::App* table = sub("table", "commutation table");
  CLI::App* matrix = sub("matrix", "sign matrix M_n, or L_n with --reduced");
  CLI::App* solve = sub("solve", "solve e^A X + EPS X e^A = Q: solve A EPS EXPR");
  CLI::App* solve_sys = sub("solve-system", "solve the system over all A: solve-system EPS FILE");

  std::string avg_set, avg_adjoint, avg_group;
  avg->add_option("--set", avg_set, "all|even|odd|grade:k|qtype:m or a list like -,1,12");
  avg->add_option("--adjoint", avg_adjoint)->check(CLI::IsMember({"first", "last", "even"}));
  avg->add_option("--group", avg_group)->check(CLI::IsMember({"vee"}));

  std::optional<int> grade;
  std::string basis, pair;
  bool center = false;
  project->add_option("--grade", grade);
  project->add_option("--basis", basis);
  project->add_option("--pair", pair);
  project->add_flag("--center", center);

  bool reduced = false;
  matrix->add_flag("--reduced", reduced);
  bool zero_fill = false;
  solve_sys->add_flag("--zero-fill", zero_fill, "treat missing rhs lines as 0");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context ctx{parse_signature(signature, max_dim), output == "json", in, out};
    const int n = ctx.sig.dim();
    CLI::App* chosen = app.get_subcommands().front();
    std::vector<std::string> pos = app.remaining();
    const std::vector<std::string> own = chosen->remaining();
    pos.insert(pos.end(), own.begin(), own.end());
    for (const auto& p : pos) {
      if (p.size() > 2 && p.rfind("--", 0) == 0) throw UsageError("unknown option '" + p + "'");
    }

    if (chosen == mul) {
      expect_args(pos, 2, "mul EXPR EXPR");
      ctx.emit(geometric_product(ctx.expr(pos[0]), ctx.expr(pos[1])));
    } else if (chosen == avg) {
      expect_args(pos, 1, "avg [--set S | --adjoint first|last|even | --group vee] EXPR");
      const int selected = !avg_set.empty() + !avg_adjoint.empty() + !avg_group.empty();
      if (selected > 1) throw UsageError("avg: choose at most one of --set, --adjoint, --group");
      const Multivector u = ctx.expr(pos[0]);
      if (!avg_set.empty()) {
        ctx.emit(average_subset(u, parse_subset(ctx.sig, avg_set)));
      } else if (!avg_adjoint.empty()) {
        const StandardPartitions parts = standard_partitions(ctx.sig);
        if (avg_adjoint == "first") {
          ctx.emit(average_adjoint(u, parts.first));
        } else if (avg_adjoint == "last") {
          ctx.emit(average_adjoint(u, parts.last));
        } else {
          ctx.emit(average_adjoint(u, even_partition(ctx.sig)));
        }
      } else {
        ctx.emit(reynolds_vee(u));
      }
    } else if (chosen == project) {
      expect_args(pos, 1, "project [--grade k | --basis A | --center | --pair A] EXPR");
      const int selected = grade.has_value() + !basis.empty() + !pair.empty() + center;
      if (selected != 1) throw UsageError("project: choose exactly one of --grade, --basis, --center, --pair");
      const Multivector u = ctx.expr(pos[0]);
      if (grade) {
        if (*grade < 0 || *grade > n) throw UsageError("--grade must lie in 0.." + std::to_string(n));
        ctx.emit(grade_project(u, *grade));
      } else if (!basis.empty()) {
        ctx.emit(pi_basis(u, ctx.index(basis)));
      } else if (!pair.empty()) {
        if (n % 2 == 0) throw UsageError("--pair applies to odd n only");
        ctx.emit(pi_pair(u, ctx.index(pair)));
      } else {
        ctx.emit(center_project(u));
      }
    } else if (chosen == conj) {
      expect_args(pos, 2, "conj A EXPR");
      ctx.emit(conjugate(ctx.expr(pos[1]), ctx.index(pos[0])));
    } else if (chosen == split) {
      expect_args(pos, 2, "split A EXPR");
      const MultiIndex a = ctx.index(pos[0]);
      const CommutantSplit<Rational> s = commutant_split(ctx.expr(pos[1]), a);
      if (ctx.json) {
        nlohmann::ordered_json j;
        j["index"] = index_to_string(a, n);
        j["commuting"] = format_multivector(s.commuting_part);
        j["anticommuting"] = format_multivector(s.anticommuting_part);
        out << j.dump() << '\n';
      } else {
        out << "commuting: " << format_multivector(s.commuting_part) << '\n'
            << "anticommuting: " << format_multivector(s.anticommuting_part) << '\n';
      }
    } else if (chosen == table) {
      expect_args(pos, 0, "table");
      const CommutationTable t = export_table(n);
      out << (ctx.json ? to_json(t) + "\n" : to_text(t));
    } else if (chosen == matrix) {
      expect_args(pos, 0, "matrix [--reduced]");
      if (reduced && n % 2 == 0) throw UsageError("--reduced applies to odd n only");
      const SignMatrix m = reduced ? build_L(n) : build_M(n);
      out << (ctx.json ? to_json(m) + "\n" : to_text(m));
    } else if (chosen == solve) {
      expect_args(pos, 3, "solve A EPS EXPR");
      const MultiIndex a = ctx.index(pos[0]);
      const Rational eps = parse_epsilon(pos[1]);
      return ctx.emit(solve_single(EquationInstance(a, eps, ctx.expr(pos[2]))));
    } else if (chosen == solve_sys) {
      expect_args(pos, 2, "solve-system EPS FILE");
      const Rational eps = parse_epsilon(pos[0]);
      return ctx.emit(solve_system(read_system(ctx, eps, pos[1], zero_fill)));
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace cliffavg
