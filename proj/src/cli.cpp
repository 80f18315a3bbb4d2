#include "extres/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "extres/betti.hpp"
#include "extres/cartan.hpp"
#include "extres/errors.hpp"
#include "extres/io.hpp"
#include "extres/resolution.hpp"
#include "extres/tspread.hpp"

namespace extres::cli {

namespace {

struct Options {
  std::optional<int> n;
  std::string gens;
  std::string file;
  int i_max = 4;
  std::optional<int> j_max;
  std::string field;
  std::string t;
  std::string order;
  bool json = false;
  bool oracle = false;
  bool regular = false;
  bool check = false;
  bool closure = false;
  bool betti = false;
};

// Thrown for bad requests that CLI11 cannot see (missing ideal, bad bounds).
struct Usage : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

std::string set_to_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int k : indices_of(s)) {
    out += (first ? "" : ",") + std::to_string(k);
    first = false;
  }
  return out + "}";
}

class Session {
public:
  Session(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  int dispatch(const std::string& command) {
    if (opt_.i_max < 0 || opt_.i_max > 64) throw Usage("--imax must lie in 0..64");
    if (opt_.j_max && *opt_.j_max < 0) throw Usage("--jmax must be nonnegative");
    if (command == "betti") return betti();
    if (command == "lq") return lq(false);
    if (command == "sets") return lq(true);
    if (command == "resolve") return resolve(false);
    if (command == "verify") return resolve(true);
    if (command == "oracle") return oracle();
    if (command == "tspread") return tspread();
    if (command == "poincare") return poincare_cmd();
    if (command == "cxdepth") return cxdepth();
    throw Usage("unknown command " + command);
  }

private:
  MonomialIdeal ideal() {
    if (cached_) return *cached_;
    std::string text;
    if (!opt_.gens.empty() || opt_.n) {
      if (!opt_.n) throw Usage("-g needs -n");
      if (*opt_.n < 1 || *opt_.n > 63) throw Usage("-n must lie in 1..63");
      Ambient amb(*opt_.n);
      auto gens = parse_generators(amb, opt_.gens);
      cached_ = minimalize(amb, gens);
      return *cached_;
    }
    if (!opt_.file.empty() && opt_.file != "-") {
      std::ifstream f(opt_.file);
      if (!f) throw Usage("cannot read " + opt_.file);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    } else {
      std::ostringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    }
    cached_ = parse_ideal(text);
    return *cached_;
  }

  Field field(const char* fallback) const { return Field::parse(opt_.field.empty() ? fallback : opt_.field); }

  // The order from --order, or the first one found by search. Returns nullopt
  // after reporting when none exists.
  std::optional<LinearQuotientOrder> order(LqSearchStats* stats = nullptr) {
    MonomialIdeal I = ideal();
    if (!opt_.order.empty()) {
      auto positions = parse_int_list(opt_.order);
      std::vector<std::size_t> perm;
      for (int p : positions) {
        if (p < 1 || static_cast<std::size_t>(p) > I.size()) {
          throw Usage("--order position " + std::to_string(p) + " outside 1.." + std::to_string(I.size()));
        }
        perm.push_back(static_cast<std::size_t>(p - 1));
      }
      auto check = check_linear_quotients(I, perm);
      if (!check) {
        report_failure("order does not have linear quotients: " + check.describe());
        return std::nullopt;
      }
      return check.order();
    }
    auto lq = find_lq_order(I, stats);
    if (!lq) report_failure("no LQ order: every degree-increasing order of G(I) fails");
    return lq;
  }

  void report_failure(const std::string& msg) {
    if (opt_.json) {
      out_ << nlohmann::json{{"schema", 1}, {"ok", false}, {"error", msg}}.dump() << '\n';
    } else {
      out_ << msg << '\n';
    }
  }

  void emit_table(const BettiTable& table, nlohmann::json extra = nlohmann::json::object()) {
    if (opt_.json) {
      auto doc = betti_to_json(table);
      doc.update(extra);
      out_ << doc.dump() << '\n';
    } else {
      out_ << betti_to_text(table);
    }
  }

  int betti() {
    if (opt_.oracle) return oracle();
    auto lq = order();
    if (!lq) return kMathFailure;
    emit_table(betti_lq(*lq, opt_.i_max, opt_.j_max), {{"source", "formula"}});
    return kOk;
  }

  int oracle() {
    Field k = field("gf2");
    auto result = oracle_betti(ideal(), opt_.i_max, opt_.j_max, k);
    BettiTable table(opt_.i_max);
    for (const auto& [key, v] : result.ideal.entries()) {
      if (!opt_.j_max || key.second - key.first <= *opt_.j_max) table.set(key.first, key.second, v);
    }
    if (opt_.json) {
      auto blocks = nlohmann::json::array();
      for (const auto& b : result.blocks) {
        blocks.push_back({{"i", b.homological}, {"degree", b.degree}, {"dimension", b.dimension},
                          {"boundary_rank", b.boundary_rank}, {"homology", b.homology}});
      }
      emit_table(table, {{"source", "oracle"}, {"field", k.name()}, {"blocks", blocks}});
    } else {
      out_ << betti_to_text(table);
      out_ << "field " << k.name() << "; Cartan blocks (i, degree, dim, rank d_i, H_i) of E/I:\n";
      for (const auto& b : result.blocks) {
        out_ << "  " << b.homological << ' ' << b.degree << ' ' << b.dimension << ' ' << b.boundary_rank << ' '
             << b.homology << '\n';
      }
    }
    return kOk;
  }

  int lq(bool sets_only) {
    LqSearchStats stats;
    auto lq = order(&stats);
    if (!lq) {
      if (!opt_.json && opt_.order.empty()) {
        out_ << "colon checks " << stats.colon_checks << ", dead ends " << stats.dead_ends << ", orders ruled out "
             << stats.orders_ruled_out << '\n';
      }
      return kMathFailure;
    }
    if (opt_.json) {
      auto gens = nlohmann::json::array();
      for (std::size_t j = 0; j < lq->size(); ++j) {
        gens.push_back({{"generator", indices_of(lq->generator(j).support())}, {"set", indices_of(lq->set(j))}});
      }
      out_ << nlohmann::json{{"schema", 1}, {"ok", true}, {"ideal", ideal_to_json(lq->ideal())}, {"order", gens}}.dump()
           << '\n';
      return kOk;
    }
    if (!sets_only) {
      out_ << "LQ order:";
      for (const auto& g : lq->order()) out_ << ' ' << g.to_string();
      out_ << '\n';
    }
    for (std::size_t j = 0; j < lq->size(); ++j) {
      out_ << "  " << lq->generator(j).to_string() << "  set = " << set_to_string(lq->set(j)) << "  |set| = "
           << cardinality(lq->set(j)) << '\n';
    }
    return kOk;
  }

  int resolve(bool verify) {
    if (opt_.i_max < 1) throw Usage("--imax must be at least 1 for a resolution");
    std::optional<LinearQuotientOrder> lq;
    if (opt_.regular && opt_.order.empty()) {
      // Any order will do, so look for one whose decomposition function is regular.
      if (!find_lq_order(ideal())) {
        report_failure("no LQ order: every degree-increasing order of G(I) fails");
        return kMathFailure;
      }
      lq = find_regular_lq_order(ideal());
      if (!lq) {
        report_failure("regularity false: no LQ order has a regular decomposition function");
        return kMathFailure;
      }
    } else {
      lq = order();
    }
    if (!lq) return kMathFailure;
    Field k = field("qq");
    nlohmann::json doc{{"schema", 1}};
    std::optional<FreeComplex> complex;
    if (opt_.regular) {
      DecompositionFunction df(*lq);
      auto w = df.regularity_violation();
      if (w) {
        std::ostringstream msg;
        const Monomial& u = lq->generator(w->generator);
        msg << "regularity false: u = " << u.to_string() << ", s = " << w->s << ", g(e" << w->s << "*"
            << u.to_string() << ") = " << lq->generator(w->image).to_string();
        report_failure(msg.str());
        return kMathFailure;
      }
      if (opt_.json) {
        doc["regular"] = true;
      } else {
        out_ << "regularity true\n";
      }
      complex = resolve_regular(df, opt_.i_max, k);
    } else {
      complex = lift_mapping_cone(*lq, opt_.i_max, k);
    }
    if (!verify) {
      if (opt_.json) {
        doc.update(complex_to_json(*complex));
        out_ << doc.dump() << '\n';
      } else {
        out_ << complex_to_text(*complex);
      }
      return kOk;
    }
    auto report = verify_complex(*complex);
    if (opt_.json) {
      doc.update(verify_report_to_json(report));
      out_ << doc.dump() << '\n';
    } else {
      auto yes = [](bool b) { return b ? "true" : "false"; };
      out_ << "ranks";
      for (int i = 0; i <= complex->i_max(); ++i) out_ << ' ' << complex->rank(i);
      out_ << "\nd∘d=0 " << yes(report.d_squared_zero) << "\nminimal " << yes(report.minimal) << "\nhomogeneous "
           << yes(report.homogeneous) << "\nexact (1 <= i <= " << complex->i_max() - 1 << ") " << yes(report.exact)
           << "\nH_0 = E/I " << yes(report.resolves_quotient) << '\n';
      for (const auto& f : report.failures) out_ << "  " << f << '\n';
    }
    return report.ok() ? kOk : kMathFailure;
  }

  int tspread() {
    if (opt_.t.empty()) throw Usage("tspread needs --t");
    TSpreadVector t = TSpreadVector::parse(opt_.t);
    int modes = int(opt_.check) + int(opt_.closure) + int(opt_.betti);
    if (modes != 1) throw Usage("tspread needs exactly one of --check, --closure, --betti");
    MonomialIdeal I = ideal();
    if (opt_.check) {
      bool ok = false;
      std::string why;
      try {
        ok = is_tspread_strongly_stable(I, t);
      } catch (const NotTSpread& e) {
        why = e.what();
      }
      if (opt_.json) {
        out_ << nlohmann::json{{"schema", 1}, {"t", t.gaps()}, {"tspread_strongly_stable", ok}}.dump() << '\n';
      } else {
        out_ << t.to_string() << "-spread strongly stable: " << (ok ? "true" : "false") << '\n';
        if (!why.empty()) out_ << "  " << why << '\n';
      }
      return ok ? kOk : kMathFailure;
    }
    if (opt_.closure) {
      MonomialIdeal closed = tspread_closure(I.ambient(), I.generators(), t);
      if (opt_.json) {
        auto doc = ideal_to_json(closed);
        doc["schema"] = 1;
        out_ << doc.dump() << '\n';
      } else {
        out_ << ideal_to_text(closed) << '\n';
      }
      return kOk;
    }
    emit_table(betti_tspread(I, t, opt_.i_max), {{"source", "tspread"}});
    return kOk;
  }

  int poincare_cmd() {
    auto lq = order();
    if (!lq) return kMathFailure;
    auto p = poincare(*lq, opt_.i_max, opt_.j_max);
    if (opt_.json) {
      auto doc = betti_to_json(p.table());
      doc["series"] = p.to_string();
      out_ << doc.dump() << '\n';
    } else {
      out_ << "P(s,t) = " << p.to_string() << " + O(t^" << opt_.i_max + 1 << ")\n";
    }
    return kOk;
  }

  int cxdepth() {
    auto lq = order();
    if (!lq) return kMathFailure;
    auto cd = complexity_and_depth(*lq);
    if (opt_.json) {
      out_ << nlohmann::json{{"schema", 1},
                             {"complexity", cd.complexity},
                             {"depth", cd.depth},
                             {"assumes_infinite_field", cd.assumes_infinite_field}}
                  .dump()
           << '\n';
    } else {
      out_ << "cx " << cd.complexity << "\ndepth " << cd.depth << "\n";
      if (cd.assumes_infinite_field) out_ << "(depth assumes an infinite field)\n";
    }
    return kOk;
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<MonomialIdeal> cached_;
};

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("-n", opt.n, "number of exterior variables");
  sub->add_option("-g,--gens", opt.gens, "generators, e.g. [1,3],[1,4] or e1*e3,e1*e4");
  sub->add_option("--file", opt.file, "ideal file (text or JSON); - for stdin");
  sub->add_option("--imax", opt.i_max, "largest homological degree");
  sub->add_option("--jmax", opt.j_max, "largest row j - i of the Betti table");
  sub->add_option("--field", opt.field, "gf2, gfp:P or qq");
  sub->add_option("--order", opt.order, "LQ order as 1-based positions into G(I), e.g. 2,1,3");
  sub->add_flag("--json", opt.json, "JSON output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolutions and Betti numbers of monomial ideals with linear quotients over an exterior algebra",
               "extres"};
  app.require_subcommand(1);
  Options opt;
  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry commands[] = {
      {"betti", "graded Betti numbers from set sizes"},
      {"lq", "find or check a linear quotient order"},
      {"sets", "set(u) for every generator"},
      {"resolve", "build the truncated minimal resolution"},
      {"verify", "build and verify the truncated resolution"},
      {"oracle", "Betti numbers from Cartan homology"},
      {"tspread", "t-spread checks, closures and Betti numbers"},
      {"poincare", "truncated graded Poincare series"},
      {"cxdepth", "complexity and depth"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, opt);
    std::string name = c.name;
    if (name == "betti") sub->add_flag("--oracle", opt.oracle, "use the Cartan oracle");
    if (name == "resolve" || name == "verify") sub->add_flag("--regular", opt.regular, "explicit differentials");
    if (name == "tspread") {
      sub->add_option("--t", opt.t, "t vector, e.g. 2,2");
      sub->add_flag("--check", opt.check);
      sub->add_flag("--closure", opt.closure);
      sub->add_flag("--betti", opt.betti);
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    Session session(opt, in, out);
    return session.dispatch(command);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const AmbientMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMathFailure;
  }
}

}  // namespace extres::cli
