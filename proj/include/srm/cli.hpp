#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srm/bruhat.hpp"
#include "srm/core.hpp"
#include "srm/decompose.hpp"
#include "srm/digraph.hpp"
#include "srm/enumerate.hpp"
#include "srm/interchange.hpp"
#include "srm/io.hpp"
#include "srm/matrix.hpp"
#include "srm/polytope.hpp"
#include "srm/verify.hpp"

namespace srm::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline SignMatrix load_matrix(const std::string& path) {
  const std::string text = read_file(path);
  // JSON files are accepted alongside the plain text format
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return matrix_from_json(nlohmann::json::parse(text));
    break;
  }
  return parse_matrix_text(text);
}

}  // namespace detail

/// Command-line front end; returns the process exit status.
/// Exit codes: 0 success, 1 domain error, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sign-restricted matrix toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  // validate
  {
    auto* cmd = app.add_subcommand("validate", "check a matrix against the prefix conditions");
    auto file = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "matrix file (text or JSON)")->required();
    cmd->add_flag("--json", *json, "JSON output");
    cmd->callback([&action, file, json, &out] {
      action = [file, json, &out] {
        const ValidationResult r = validate_srm(detail::load_matrix(*file));
        if (*json) {
          nlohmann::json j{{"valid", r.ok()}};
          if (!r.ok())
            j["violation"] = {{"kind", r.violation->kind == ViolationKind::ColumnPrefix
                                           ? "column_prefix"
                                           : "row_prefix"},
                              {"row", r.violation->row + 1},
                              {"col", r.violation->col + 1},
                              {"value", r.violation->value}};
          out << j.dump() << '\n';
        } else {
          out << (r.ok() ? "valid" : r.violation->to_string()) << '\n';
        }
        return r.ok() ? 0 : 1;
      };
    });
  }

  // enumerate
  {
    auto* cmd = app.add_subcommand("enumerate", "stream a matrix class");
    struct Opts {
      int m = 0, n = 0, max_cells = kDefaultMaxCells;
      bool count = false, plus = false, json = false;
      int c = -1;
      std::string rs, cs;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("m", o->m, "rows")->required();
    cmd->add_option("n", o->n, "cols")->required();
    cmd->add_flag("--count", o->count, "print the count only");
    cmd->add_flag("--plus", o->plus, "restrict to S+ (no -1 entries)");
    cmd->add_option("--c", o->c, "cap every row sum at c");
    cmd->add_option("--row-sums", o->rs, "exact row sums, comma separated");
    cmd->add_option("--col-sums", o->cs, "exact column sums, comma separated");
    cmd->add_option("--max-cells", o->max_cells, "enumeration cell cap (default 20)");
    cmd->add_flag("--json", o->json, "JSON output (with --count)");
    cmd->callback([&action, o, &out, &err] {
      action = [o, &out, &err] {
        if (o->max_cells > kDefaultMaxCells)
          err << "warning: raising the enumeration cap to " << o->max_cells << " cells\n";
        ClassFilter f;
        f.plus_only = o->plus;
        if (o->c >= 0) f.c_bound = o->c;
        if (!o->rs.empty() || !o->cs.empty()) {
          if (o->rs.empty() || o->cs.empty())
            throw std::invalid_argument("--row-sums and --col-sums must be given together");
          f.margin_constraint = MarginPair{parse_int_vector(o->rs), parse_int_vector(o->cs)};
        }
        if (o->count) {
          const long long c = count_srms(o->m, o->n, f, o->max_cells);
          if (o->json)
            out << nlohmann::json{{"count", c}}.dump() << '\n';
          else
            out << c << '\n';
        } else {
          bool first = true;
          for_each_srm(o->m, o->n, f,
                       [&](const Srm& a) {
                         if (!first) out << '\n';
                         out << write_matrix_text(a.matrix());
                         first = false;
                       },
                       o->max_cells);
        }
        return 0;
      };
    });
  }

  // zeta
  {
    auto* cmd = app.add_subcommand("zeta", "maximum nonzero count and an attaining matrix");
    auto m = std::make_shared<int>(), n = std::make_shared<int>();
    auto extremal = std::make_shared<bool>(false), json = std::make_shared<bool>(false);
    cmd->add_option("m", *m, "rows")->required();
    cmd->add_option("n", *n, "cols")->required();
    cmd->add_flag("--extremal", *extremal, "also print an attaining SRM");
    cmd->add_flag("--json", *json, "JSON output");
    cmd->callback([&action, m, n, extremal, json, &out] {
      action = [m, n, extremal, json, &out] {
        const int z = max_nonzeros(*m, *n);
        if (*json) {
          nlohmann::json j{{"m", *m}, {"n", *n}, {"zeta", z}};
          if (*extremal) j["extremal"] = matrix_to_json(extremal_srm(*m, *n).matrix());
          out << j.dump() << '\n';
        } else {
          out << z << '\n';
          if (*extremal) out << write_matrix_text(extremal_srm(*m, *n).matrix());
        }
        return 0;
      };
    });
  }

  // eliminate
  {
    auto* cmd = app.add_subcommand("eliminate", "remove the -1 entries by interchanges");
    auto file = std::make_shared<std::string>();
    auto verbose = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "matrix file")->required();
    cmd->add_flag("--verbose", *verbose, "print intermediate matrices");
    cmd->callback([&action, file, verbose, &out] {
      action = [file, verbose, &out] {
        const Srm a = require_srm(detail::load_matrix(*file));
        const EliminationResult r = eliminate_minus_ones(a);
        const std::vector<SignMatrix> states = replay_trace(r.trace);
        for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
          out << r.trace.steps[i].to_string() << '\n';
          if (*verbose) out << write_matrix_text(states[i + 1]);
        }
        out << "result\n" << write_matrix_text(r.result.matrix());
        return 0;
      };
    });
  }

  // path
  {
    auto* cmd = app.add_subcommand("path", "interchange path between two matrices");
    auto fa = std::make_shared<std::string>(), fb = std::make_shared<std::string>();
    auto pm = std::make_shared<bool>(false), verbose = std::make_shared<bool>(false);
    auto max_cells = std::make_shared<int>(kDefaultMaxCells);
    cmd->add_option("a", *fa, "start matrix file")->required();
    cmd->add_option("b", *fb, "end matrix file")->required();
    cmd->add_flag("--pm", *pm, "path inside A^{+-}(R,S) instead of the SRM class");
    cmd->add_flag("--verbose", *verbose, "print intermediate matrices");
    cmd->add_option("--max-cells", *max_cells, "cell cap for the +- search");
    cmd->callback([&action, fa, fb, pm, verbose, max_cells, &out] {
      action = [fa, fb, pm, verbose, max_cells, &out] {
        const SignMatrix a = detail::load_matrix(*fa), b = detail::load_matrix(*fb);
        const InterchangeTrace t = *pm ? pm_interchange_path(a, b, *max_cells)
                                       : srm_interchange_path(require_srm(a), require_srm(b));
        const std::vector<SignMatrix> states = replay_trace(t);
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
          out << t.steps[i].to_string() << '\n';
          if (*verbose) out << write_matrix_text(states[i + 1]);
        }
        out << "steps " << t.steps.size() << '\n';
        return 0;
      };
    });
  }

  // bruhat family + top-level hasse alias
  auto hasse_action = [&out](int m, int n, bool plus, const std::string& dot, int max_cells) {
    const HasseDiagram d = hasse_diagram(m, n, plus, max_cells);
    if (!dot.empty()) {
      std::ofstream f(dot);
      if (!f) throw std::invalid_argument("cannot write file: " + dot);
      f << hasse_to_dot(d);
    }
    out << "nodes " << d.nodes.size() << " edges " << d.edges.size() << '\n';
    return 0;
  };
  {
    auto* cmd = app.add_subcommand("bruhat", "Bruhat order operations");
    cmd->require_subcommand(1);

    auto add_pair_cmd = [&](const std::string& name, const std::string& help, auto handler) {
      auto* sub = cmd->add_subcommand(name, help);
      auto fa = std::make_shared<std::string>(), fb = std::make_shared<std::string>();
      sub->add_option("a", *fa, "matrix file")->required();
      sub->add_option("b", *fb, "matrix file")->required();
      sub->callback([&action, fa, fb, handler] {
        action = [fa, fb, handler] {
          return handler(require_srm(detail::load_matrix(*fa)),
                         require_srm(detail::load_matrix(*fb)));
        };
      });
    };
    add_pair_cmd("leq", "is A <=_B B?", [&out](const Srm& a, const Srm& b) {
      out << (bruhat_leq(a, b) ? "true" : "false") << '\n';
      return 0;
    });
    add_pair_cmd("meet", "greatest lower bound", [&out](const Srm& a, const Srm& b) {
      out << write_matrix_text(bruhat_meet(a, b).matrix());
      return 0;
    });
    add_pair_cmd("join", "least upper bound", [&out](const Srm& a, const Srm& b) {
      out << write_matrix_text(bruhat_join(a, b).matrix());
      return 0;
    });
    add_pair_cmd("covers", "does B cover A in (S+, <=_B)?", [&out](const Srm& a, const Srm& b) {
      out << (covers(a, b) ? "true" : "false") << '\n';
      return 0;
    });
    {
      auto* sub = cmd->add_subcommand("decompose-irreducible",
                                      "meet-irreducible single-row decomposition");
      auto file = std::make_shared<std::string>();
      sub->add_option("a", *file, "matrix file")->required();
      sub->callback([&action, file, &out] {
        action = [file, &out] {
          const Srm a = require_srm(detail::load_matrix(*file));
          bool first = true;
          for (const Srm& t : meet_irreducible_decomposition(a)) {
            if (!first) out << '\n';
            out << write_matrix_text(t.matrix());
            first = false;
          }
          return 0;
        };
      });
    }
    {
      auto* sub = cmd->add_subcommand("hasse", "Hasse diagram of the class");
      struct Opts {
        int m = 0, n = 0, max_cells = kDefaultMaxCells;
        bool plus = false;
        std::string dot;
      };
      auto o = std::make_shared<Opts>();
      sub->add_option("m", o->m, "rows")->required();
      sub->add_option("n", o->n, "cols")->required();
      sub->add_flag("--plus", o->plus, "restrict to S+");
      sub->add_option("--dot", o->dot, "write DOT output to this file");
      sub->add_option("--max-cells", o->max_cells, "enumeration cell cap");
      sub->callback([&action, o, hasse_action] {
        action = [o, hasse_action] { return hasse_action(o->m, o->n, o->plus, o->dot, o->max_cells); };
      });
    }
  }
  {
    auto* cmd = app.add_subcommand("hasse", "Hasse diagram of the class (alias)");
    struct Opts {
      int m = 0, n = 0, max_cells = kDefaultMaxCells;
      bool plus = false;
      std::string dot;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--m", o->m, "rows")->required();
    cmd->add_option("--n", o->n, "cols")->required();
    cmd->add_flag("--plus", o->plus, "restrict to S+");
    cmd->add_option("--dot", o->dot, "write DOT output to this file");
    cmd->add_option("--max-cells", o->max_cells, "enumeration cell cap");
    cmd->callback([&action, o, hasse_action] {
      action = [o, hasse_action] { return hasse_action(o->m, o->n, o->plus, o->dot, o->max_cells); };
    });
  }

  // incidence
  {
    auto* cmd = app.add_subcommand("incidence", "SRM ordering of a looped digraph");
    auto file = std::make_shared<std::string>();
    cmd->add_option("file", *file, "digraph file")->required();
    cmd->callback([&action, file, &out] {
      action = [file, &out] {
        const LoopedDigraph d = parse_digraph_text(detail::read_file(*file));
        if (!d.acyclic()) {
          out << "not orderable: digraph has a directed cycle\n";
          return 1;
        }
        for (int v = 0; v < d.vertex_count; ++v) {
          const int excess = d.in_degree(v) - d.out_degree(v);
          if (excess > 1) {
            out << "not orderable: vertex " << v + 1 << " has in-degree exceeding out-degree by "
                << excess << '\n';
            return 1;
          }
          if (excess == 1 && !d.loop[v]) {
            out << "not orderable: vertex " << v + 1 << " needs a loop\n";
            return 1;
          }
        }
        const SrmOrdering ord = srm_ordering(d);
        out << "vertex order:";
        for (int v : ord.vertex_order) out << ' ' << v + 1;
        out << "\nedge order:";
        for (int e : ord.edge_order)
          out << " (" << d.edges[e].first + 1 << "," << d.edges[e].second + 1 << ")";
        out << '\n' << write_matrix_text(ord.matrix.matrix());
        return 0;
      };
    });
  }

  // polytope
  {
    auto* cmd = app.add_subcommand("polytope", "c-SRM polytope membership and verification");
    auto check = std::make_shared<std::string>();
    auto c = std::make_shared<int>(-1);
    auto verify_args = std::make_shared<std::vector<int>>();
    cmd->add_option("--check", *check, "rational matrix file to test for membership");
    cmd->add_option("--c", *c, "row-sum cap of the polytope");
    cmd->add_option("--verify", *verify_args, "m n c: run the desk-scale verification")
        ->expected(3);
    cmd->callback([&action, check, c, verify_args, &out] {
      action = [check, c, verify_args, &out] {
        if (!verify_args->empty()) {
          const PolytopeReport rep =
              verify_polytope((*verify_args)[0], (*verify_args)[1], (*verify_args)[2]);
          out << "integral points: " << rep.integral_point_count << '\n'
              << "match enumerated class: " << (rep.integral_points_match_class ? "yes" : "no")
              << '\n'
              << "all vertices: " << (rep.all_integral_points_vertices ? "yes" : "no") << '\n';
          if (rep.c_covers_all_rows)
            out << "equals S_{m,n} (c >= n): " << (rep.class_equals_unrestricted ? "yes" : "no")
                << '\n';
          out << (rep.ok() ? "PASS" : "FAIL: " + rep.first_discrepancy) << '\n';
          return rep.ok() ? 0 : 1;
        }
        if (check->empty() || *c < 0)
          throw std::invalid_argument("polytope: need either --verify m n c or --check FILE --c K");
        const RationalMatrix x = parse_rational_matrix_text(detail::read_file(*check));
        const ContainsResult r = polytope_contains(x, PolytopeSpec::c_srm(x.rows(), x.cols(), *c));
        out << (r.ok ? "member" : "not a member: " + r.first_violation) << '\n';
        return r.ok ? 0 : 1;
      };
    });
  }

  // decompose
  {
    auto* cmd = app.add_subcommand("decompose", "signed subpermutation decomposition");
    auto file = std::make_shared<std::string>();
    cmd->add_option("file", *file, "matrix file")->required();
    cmd->callback([&action, file, &out] {
      action = [file, &out] {
        const Srm a = require_srm(detail::load_matrix(*file));
        const SignedDecomposition d = signed_subperm_decomposition(a);
        for (std::size_t i = 0; i < d.terms.size(); ++i) {
          out << "lambda " << (d.terms[i].sign > 0 ? "+1" : "-1") << '\n'
              << write_matrix_text(d.terms[i].p);
          if (i + 1 < d.terms.size()) out << '\n';
        }
        return 0;
      };
    });
  }

  // joint
  {
    auto* cmd = app.add_subcommand("joint", "disjoint joint realization search");
    struct Opts {
      std::string r1, s1, r2, s2;
      int max_cells = kDefaultMaxCells;
    };
    auto o = std::make_shared<Opts>();
    cmd->add_option("--r1", o->r1, "row sums of B1")->required();
    cmd->add_option("--s1", o->s1, "column sums of B1")->required();
    cmd->add_option("--r2", o->r2, "row sums of B2")->required();
    cmd->add_option("--s2", o->s2, "column sums of B2")->required();
    cmd->add_option("--max-cells", o->max_cells, "enumeration cell cap");
    cmd->callback([&action, o, &out] {
      action = [o, &out] {
        const std::optional<JointRealization> jr =
            find_joint_realization(parse_int_vector(o->r1), parse_int_vector(o->s1),
                                   parse_int_vector(o->r2), parse_int_vector(o->s2), o->max_cells);
        if (!jr) {
          out << "none\n";
          return 0;
        }
        out << "B1\n" << write_matrix_text(jr->b1) << "\nB2\n" << write_matrix_text(jr->b2);
        return 0;
      };
    });
  }

  // verify-all
  {
    auto* cmd = app.add_subcommand("verify-all", "run every desk-scale theorem suite");
    auto json = std::make_shared<bool>(false);
    cmd->add_flag("--json", *json, "JSON output");
    cmd->callback([&action, json, &out] {
      action = [json, &out] {
        const std::vector<verify::SuiteResult> rows = verify::run_all();
        bool all = true;
        if (*json) {
          nlohmann::json j = nlohmann::json::array();
          for (const auto& r : rows) {
            j.push_back({{"suite", r.key}, {"pass", r.pass}, {"detail", r.detail}});
            all &= r.pass;
          }
          out << j.dump() << '\n';
        } else {
          for (const auto& r : rows) {
            out << (r.pass ? "PASS  " : "FAIL  ") << r.key << "  (" << r.detail << ")\n";
            all &= r.pass;
          }
          out << (all ? "all suites passed" : "SOME SUITES FAILED") << '\n';
        }
        return all ? 0 : 1;
      };
    });
  }

  std::vector<const char*> argv;
  argv.push_back("srm");
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace srm::cli
