// scox — command line for the singular Coxeter monoid.
//
// Every subcommand is a thin shell over one library call; the only logic
// that lives here is argument plumbing and the exit-code contract:
//
//   0  success
//   1  validation problems (bad flags, unknown types, malformed input,
//      relations that do not apply, verification failures)
//   2  a resource bound was hit (vertex caps, table sizes)
//
// Output is byte-deterministic for a fixed invocation: everything the
// library hands back is already canonically ordered, and nothing here
// iterates an unordered container.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scox/complexes.h"
#include "scox/coset.h"
#include "scox/coxeter.h"
#include "scox/expression.h"
#include "scox/io.h"
#include "scox/relations.h"
#include "scox/rewrite.h"
#include "scox/smallset.h"
#include "scox/webs.h"

namespace {

using namespace scox;

// ------------------------------------------------------------------ systems

// Either a named type ("B3", "A2xA1", "I2(7)") or a JSON matrix file; the
// two flags are mutually exclusive and exactly one is required.
struct SystemSpec {
  std::string type;
  std::string matrix_file;
};

void add_system_flags(CLI::App* cmd, SystemSpec& spec) {
  auto* grp = cmd->add_option_group("system", "how to specify the Coxeter system");
  grp->add_option("--type", spec.type, "named finite type, e.g. A3, B2, I2(5), A2xA1");
  grp->add_option("--matrix", spec.matrix_file, "JSON Coxeter matrix file (docs/formats.md)");
  grp->require_option(1);
}

// Matrix files look like {"matrix": [[1,3],[3,1]], "labels": ["s","t"]},
// with m(s,t) = 0 encoding an infinite bond and labels optional.
CoxeterMatrix load_matrix(const std::string& path, std::vector<std::string>& labels) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read matrix file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("matrix"))
    throw std::invalid_argument(path + ": expected an object with a \"matrix\" field");
  std::vector<std::vector<int>> entries;
  try {
    entries = j.at("matrix").get<std::vector<std::vector<int>>>();
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return CoxeterMatrix::from_entries(entries);
}

std::unique_ptr<System> load_system(const SystemSpec& spec) {
  if (!spec.type.empty()) return System::from_name(spec.type);
  std::vector<std::string> labels;
  CoxeterMatrix mat = load_matrix(spec.matrix_file, labels);
  return std::make_unique<System>(std::move(mat), std::move(labels));
}

// ------------------------------------------------------------------- shared

std::string element_str(const System& sys, const Element& w) {
  return word_to_string(sys, sys.word(w));
}

void print_coset_text(std::ostream& os, const System& sys, const Coset& p) {
  CosetLengths len = coset_lengths(sys, p);
  Coset c = core(sys, p);
  os << "left: " << genset_to_string(sys, p.left) << "\n"
     << "right: " << genset_to_string(sys, p.right) << "\n"
     << "min: " << element_str(sys, p.min) << "  (length " << sys.length(p.min) << ")\n"
     << "max: " << element_str(sys, p.max) << "  (length " << sys.length(p.max) << ")\n"
     << "lengths: minus=" << len.minus << " plus=" << len.plus << " total=" << len.total
     << "\n"
     << "redundancy: left=" << genset_to_string(sys, p.red_left)
     << " right=" << genset_to_string(sys, p.red_right) << "\n"
     << "core: left=" << genset_to_string(sys, c.left)
     << " right=" << genset_to_string(sys, c.right) << " min=" << element_str(sys, c.min)
     << "\n";
}

nlohmann::json coset_to_json(const System& sys, const Coset& p) {
  CosetLengths len = coset_lengths(sys, p);
  Coset c = core(sys, p);
  return {{"left", genset_to_string(sys, p.left)},
          {"right", genset_to_string(sys, p.right)},
          {"min", element_str(sys, p.min)},
          {"max", element_str(sys, p.max)},
          {"lengths", {{"minus", len.minus}, {"plus", len.plus}, {"total", len.total}}},
          {"redundancy",
           {{"left", genset_to_string(sys, p.red_left)},
            {"right", genset_to_string(sys, p.red_right)}}},
          {"core",
           {{"left", genset_to_string(sys, c.left)},
            {"right", genset_to_string(sys, c.right)},
            {"min", element_str(sys, c.min)}}}};
}

// --------------------------------------------------------------- subcommands

void register_classify(CLI::App& app) {
  struct Opts {
    SystemSpec spec;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("classify", "classify a Coxeter matrix against the finite types");
  add_system_flags(cmd, opts->spec);
  cmd->callback([opts] {
    CoxeterMatrix mat;
    std::vector<std::string> labels;
    if (!opts->spec.type.empty()) {
      mat = System::from_name(opts->spec.type)->matrix();
    } else {
      mat = load_matrix(opts->spec.matrix_file, labels);
    }
    for (int i = static_cast<int>(labels.size()); i < mat.rank; ++i)
      labels.push_back("s" + std::to_string(i + 1));
    Classification cls = classify(mat, GenSet::full(mat.rank));
    if (!cls.finite) {
      std::cout << "infinite-type\n";
      return;
    }
    std::cout << "finite-type: " << cls.name() << "\n";
    for (const TypeComponent& comp : cls.components) {
      std::cout << "  " << comp.name << ":";
      for (int s : comp.nodes) std::cout << " " << labels[s];
      std::cout << "  (positive roots: " << comp.positive_roots << ")\n";
    }
  });
}

void register_coset(CLI::App& app) {
  struct Opts {
    SystemSpec spec;
    std::string left, right, word;
    std::string format = "text";
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("coset", "min/max/redundancy/core/lengths of a double coset");
  add_system_flags(cmd, opts->spec);
  cmd->add_option("--left", opts->left, "left parabolic subset J")->required();
  cmd->add_option("--right", opts->right, "right parabolic subset I")->required();
  cmd->add_option("--word", opts->word, "a word whose (J,I)-coset to describe")->required();
  cmd->add_option("--format", opts->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->callback([opts] {
    auto sys = load_system(opts->spec);
    GenSet J = genset_from_string(*sys, opts->left);
    GenSet I = genset_from_string(*sys, opts->right);
    Element w = sys->from_word(word_from_string(*sys, opts->word));
    Coset p = coset_of(*sys, J, w, I);
    if (opts->format == "json")
      std::cout << coset_to_json(*sys, p).dump(2) << "\n";
    else
      print_coset_text(std::cout, *sys, p);
  });
}

void register_rex(CLI::App& app) {
  struct Opts {
    SystemSpec spec;
    std::string left, right, word;
    size_t max_vertices = 0;
  };
  auto* rex = app.add_subcommand("rex", "reduced expressions of a double coset");
  rex->require_subcommand(1);

  auto add_common = [](CLI::App* cmd, Opts& o) {
    add_system_flags(cmd, o.spec);
    cmd->add_option("--left", o.left, "left parabolic subset J")->required();
    cmd->add_option("--right", o.right, "right parabolic subset I")->required();
    cmd->add_option("--word", o.word, "a word in the coset")->required();
  };
  auto coset_of_opts = [](const System& sys, const Opts& o) {
    GenSet J = genset_from_string(sys, o.left);
    GenSet I = genset_from_string(sys, o.right);
    Element w = sys.from_word(word_from_string(sys, o.word));
    return coset_of(sys, J, w, I);
  };

  struct Mode {
    const char* name;
    const char* help;
    Expression (*make)(const System&, const Coset&);
  };
  for (Mode mode : {Mode{"some", "one reduced expression", &some_rex},
                    Mode{"high", "the high road", &high_road},
                    Mode{"low", "the low road", &low_road}}) {
    auto opts = std::make_shared<Opts>();
    auto* cmd = rex->add_subcommand(mode.name, mode.help);
    add_common(cmd, *opts);
    auto make = mode.make;
    cmd->callback([opts, make, coset_of_opts] {
      auto sys = load_system(opts->spec);
      Coset p = coset_of_opts(*sys, *opts);
      std::cout << expression_to_text(*sys, make(*sys, p)) << "\n";
    });
  }

  auto opts = std::make_shared<Opts>();
  auto* cmd = rex->add_subcommand("enumerate", "all reduced expressions, one per line");
  add_common(cmd, *opts);
  cmd->add_option("--max-vertices", opts->max_vertices,
                  "abort beyond this many expressions (0: SCOX_MAX_VERTICES or built-in cap)");
  cmd->callback([opts, coset_of_opts] {
    auto sys = load_system(opts->spec);
    Coset p = coset_of_opts(*sys, *opts);
    for (const Expression& e : rex_set(*sys, p, opts->max_vertices))
      std::cout << expression_to_text(*sys, e) << "\n";
  });
}

void register_reduce(CLI::App& app) {
  struct Opts {
    SystemSpec spec;
    std::string expr;
    std::string format = "text";
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("reduce", "normalize an expression, printing the rewrite trace");
  add_system_flags(cmd, opts->spec);
  cmd->add_option("--expr", opts->expr, "expression, e.g. \"[st] +u -s\" or \"[st,stu,su]\"")
      ->required();
  cmd->add_option("--format", opts->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->callback([opts] {
    auto sys = load_system(opts->spec);
    Expression e = expression_from_text(*sys, opts->expr);
    RewriteTrace trace = normalize(*sys, e);
    ExprLengths len = expr_lengths(*sys, trace.result);
    if (opts->format == "json") {
      nlohmann::json out = {{"start", expression_to_text(*sys, trace.start)},
                            {"steps", nlohmann::json::parse(trace_to_json(*sys, trace))},
                            {"result", expression_to_text(*sys, trace.result)},
                            {"length", len.total}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << trace_to_text(*sys, trace) << "result: "
                << expression_to_text(*sys, trace.result) << "  (length " << len.total
                << ")\n";
    }
  });
}

// The letter sequence of one switchback relation, 1-based like the tables.
std::string letters_csv(const std::vector<int>& c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i] + 1);
  }
  return out;
}

void register_switchback(CLI::App& app) {
  struct Opts {
    SystemSpec spec;
    int a = 0, b = 0;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand(
      "switchback", "the switchback relation for J = S \\ {s_a}, s = s_a, t = s_b");
  add_system_flags(cmd, opts->spec);
  cmd->add_option("--a", opts->a, "index of the omitted generator (1-based)")->required();
  cmd->add_option("--b", opts->b, "index of the incoming generator (1-based)")->required();
  cmd->callback([opts] {
    auto sys = load_system(opts->spec);
    if (opts->a < 1 || opts->a > sys->rank() || opts->b < 1 || opts->b > sys->rank())
      throw std::invalid_argument("generator indices must lie in 1.." +
                                  std::to_string(sys->rank()));
    GenSet J = sys->full_set().minus(opts->a - 1);
    RotationSequence rs = rotation_sequence(*sys, J, opts->a - 1, opts->b - 1);
    std::vector<int> c;
    for (int i = 1; i < rs.delta; ++i) c.push_back(rs.at(i));
    std::cout << "c = " << letters_csv(c) << "\n";
  });
}

void register_table(CLI::App& app) {
  struct Opts {
    std::string type;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd =
      app.add_subcommand("table", "all switchback rows (a,b) of an irreducible finite type");
  cmd->add_option("--type", opts->type, "irreducible type name, e.g. E8, H3, B4")->required();
  cmd->callback([opts] {
    for (const SwitchbackRow& row : section6_table(opts->type))
      std::cout << "(" << row.a << "," << row.b << "): c = " << [&] {
        std::string out;
        for (size_t i = 0; i < row.c.size(); ++i) {
          if (i) out += ",";
          out += std::to_string(row.c[i]);
        }
        return out;
      }() << "\n";
  });
}

void register_matsumoto(CLI::App& app) {
  struct Opts {
    SystemSpec spec;
    bool verify = false;
    size_t max_vertices = 0;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand(
      "matsumoto", "check that every coset's reduced expressions are connected by relations");
  add_system_flags(cmd, opts->spec);
  cmd->add_flag("--verify", opts->verify, "run the verification")->required();
  cmd->add_option("--max-vertices", opts->max_vertices,
                  "exhaustive-check ceiling per coset (0: SCOX_MAX_VERTICES or built-in cap)");
  cmd->callback([opts] {
    auto sys = load_system(opts->spec);
    MatsumotoReport rep = matsumoto_verify(*sys, opts->max_vertices);
    std::cout << "cosets: " << rep.cosets << "\n"
              << "exhaustive: " << rep.exhaustive << "\n"
              << "failures: " << rep.failures << "\n"
              << (rep.ok() ? "ok" : "FAILED") << "\n";
    if (!rep.ok()) throw std::domain_error("connectivity verification failed");
  });
}

void register_complex(CLI::App& app) {
  struct Opts {
    SystemSpec spec;
    std::string left;
    std::string format = "dot";
    size_t max_vertices = 0;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("complex", "the singular Coxeter complex of a left subset");
  add_system_flags(cmd, opts->spec);
  cmd->add_option("--left", opts->left, "left parabolic subset J")->required();
  cmd->add_option("--format", opts->format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  cmd->add_option("--max-vertices", opts->max_vertices,
                  "abort beyond this many vertices (0: SCOX_MAX_VERTICES or built-in cap)");
  cmd->callback([opts] {
    auto sys = load_system(opts->spec);
    GenSet J = genset_from_string(*sys, opts->left);
    ComplexGraph g = build_complex(*sys, J, opts->max_vertices);
    std::cout << export_complex(*sys, g, opts->format);
  });
}

void register_webs(CLI::App& app) {
  auto* webs = app.add_subcommand("webs", "the type A web calculus");
  webs->require_subcommand(1);

  {
    struct Opts {
      std::string web;
      std::string format = "text";
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = webs->add_subcommand("evaluate", "boundary, degree and coset of a web");
    cmd->add_option("--web", opts->web, "web text, e.g. \"(1,2,1) ; merge@1(1,2)\"")
        ->required();
    cmd->add_option("--format", opts->format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->callback([opts] {
      Web w = web_from_text(opts->web);
      auto sys = symmetric_group(w.bottom.total());
      Coset p = evaluate_web(*sys, w);
      Expression e = expression_from_web(w);
      bool reduced = is_reduced(*sys, e);
      if (opts->format == "json") {
        nlohmann::json out = {{"bottom", w.bottom.parts},
                              {"top", w.top().parts},
                              {"degree", degree(w)},
                              {"reduced", reduced},
                              {"coset", coset_to_json(*sys, p)}};
        std::cout << out.dump(2) << "\n";
      } else {
        auto seq = [](const ObjectSeq& o) {
          std::string s = "(";
          for (size_t i = 0; i < o.parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(o.parts[i]);
          }
          return s + ")";
        };
        std::cout << "bottom: " << seq(w.bottom) << "\n"
                  << "top: " << seq(w.top()) << "\n"
                  << "degree: " << degree(w) << "\n"
                  << "reduced: " << (reduced ? "yes" : "no") << "\n";
        print_coset_text(std::cout, *sys, p);
      }
    });
  }

  {
    struct Opts {
      std::string web, relation;
      int at = 1;
      std::string format = "text";
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = webs->add_subcommand("relate", "apply one web relation at a layer");
    cmd->add_option("--web", opts->web, "web text")->required();
    cmd->add_option("--relation", opts->relation,
                    "bigon, assoc, coassoc, square1, square2, nonredsquare, rungswap or "
                    "interchange")
        ->required();
    cmd->add_option("--at", opts->at, "layer the pattern starts at (1-based)")->required();
    cmd->add_option("--format", opts->format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->callback([opts] {
      Web w = web_from_text(opts->web);
      if (opts->at < 1) throw std::invalid_argument("--at is 1-based");
      Web out = apply_web_relation(w, web_relation_from_name(opts->relation), opts->at - 1);
      if (opts->format == "json")
        std::cout << web_to_json(out);
      else
        std::cout << web_to_text(out) << "\n";
    });
  }

  {
    struct Opts {
      std::string from, to;
    };
    auto opts = std::make_shared<Opts>();
    auto* cmd = webs->add_subcommand("hom-count", "number of webs up to equivalence");
    cmd->add_option("--from", opts->from, "source object, e.g. \"(1,1)\"")->required();
    cmd->add_option("--to", opts->to, "target object, e.g. \"(2)\"")->required();
    cmd->callback([opts] {
      ObjectSeq n = web_from_text(opts->from).bottom;
      ObjectSeq m = web_from_text(opts->to).bottom;
      std::cout << hom_count(n, m) << "\n";
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scox — the singular Coxeter monoid: cosets, expressions, relations, webs"};
  app.require_subcommand(1);
  register_classify(app);
  register_coset(app);
  register_rex(app);
  register_reduce(app);
  register_switchback(app);
  register_table(app);
  register_matsumoto(app);
  register_complex(app);
  register_webs(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 1;
  } catch (const RexBoundError& e) {
    std::cerr << "scox: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "scox: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "scox: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
