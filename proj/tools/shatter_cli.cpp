// Copyright 2026 The Shatter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through shatter.h.
//
// Exit codes: 0 success, 1 bad input or usage, 2 a consistency check failed.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shatter/shatter.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFalsified = 2;

int exit_code(shatter_status s) {
  if (s == SHATTER_OK) return kExitOk;
  std::fprintf(stderr, "error: %s: %s\n", shatter_status_name(s), shatter_last_error());
  return shatter_status_is_consistency_failure(s) ? kExitFalsified : kExitInput;
}

// Prints a library string (if any) to stdout and frees it.
void print(char* s) {
  if (s == nullptr) return;
  std::fputs(s, stdout);
  shatter_string_free(s);
}

class Family {
 public:
  Family() = default;
  Family(const Family&) = delete;
  Family& operator=(const Family&) = delete;
  ~Family() { shatter_family_free(p_); }
  shatter_family** out() { return &p_; }
  const shatter_family* get() const { return p_; }

 private:
  shatter_family* p_ = nullptr;
};

class Tree {
 public:
  Tree() = default;
  Tree(const Tree&) = delete;
  Tree& operator=(const Tree&) = delete;
  ~Tree() { shatter_tree_free(p_); }
  shatter_tree** out() { return &p_; }
  const shatter_tree* get() const { return p_; }

 private:
  shatter_tree* p_ = nullptr;
};

std::string read_stdin() {
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

shatter_status load_family(const std::string& path, Family& f) {
  if (path == "-") return shatter_family_parse(read_stdin().c_str(), f.out());
  return shatter_family_read_file(path.c_str(), f.out());
}

shatter_status load_tree(const std::string& path, Tree& t) {
  if (path == "-") return shatter_tree_parse(read_stdin().c_str(), t.out());
  return shatter_tree_read_file(path.c_str(), t.out());
}

shatter_format format_of(const std::string& name) {
  return name == "json" ? SHATTER_FORMAT_JSON : SHATTER_FORMAT_SS;
}

int emit_family(const Family& f, const std::string& format) {
  char* text = nullptr;
  const auto s = shatter_family_emit(f.get(), format_of(format), &text);
  print(text);
  if (s == SHATTER_OK && format == "json") std::fputc('\n', stdout);
  return exit_code(s);
}

// "2,1,3" -> {2, 1, 3}.
std::vector<int> parse_order(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

struct EnumerateState {
  std::string format;
};

int print_enumerated(const shatter_family* f, void* user) {
  const auto* state = static_cast<const EnumerateState*>(user);
  char* text = nullptr;
  if (shatter_family_emit(f, format_of(state->format), &text) != SHATTER_OK) return 1;
  print(text);
  // JSON lines, or blank-line separated set-system blocks.
  std::fputc('\n', stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shattering and s-extremal set systems"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string file = "-";
  std::string format = "ss";
  int result = kExitOk;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "Set-system file (.ss or JSON), - for stdin")->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"ss", "json"}));
  };

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Full report: Sh, st, VC-dimension, extremality, graph");
  add_file(analyze);
  analyze->callback([&] {
    Family f;
    auto s = load_family(file, f);
    if (s == SHATTER_OK) {
      char* out = nullptr;
      s = shatter_analyze_json(f.get(), &out);
      print(out);
    }
    result = exit_code(s);
  });

  // shatter
  bool strong = false;
  auto* shatter = app.add_subcommand("shatter", "Print the shattered sets");
  add_file(shatter);
  add_format(shatter);
  shatter->add_flag("--strong", strong, "Print the strongly shattered sets instead");
  shatter->callback([&] {
    Family f, sh;
    auto s = load_family(file, f);
    if (s == SHATTER_OK) s = strong ? shatter_strongly_shattered(f.get(), sh.out()) : shatter_shattered(f.get(), sh.out());
    result = s == SHATTER_OK ? emit_family(sh, format) : exit_code(s);
  });

  // vcdim
  auto* vcdim = app.add_subcommand("vcdim", "Print the VC-dimension");
  add_file(vcdim);
  vcdim->callback([&] {
    Family f;
    int vc = 0;
    auto s = load_family(file, f);
    if (s == SHATTER_OK) s = shatter_vc_dimension(f.get(), &vc);
    if (s == SHATTER_OK) std::printf("%d\n", vc);
    result = exit_code(s);
  });

  // extremal
  std::string method = "def";
  auto* extremal = app.add_subcommand("extremal", "Decide s-extremality");
  add_file(extremal);
  extremal->add_option("--method", method, "def: |Sh| = |F|; br: cube fibers; sm: standard monomials")
      ->check(CLI::IsMember({"def", "br", "sm"}));
  extremal->callback([&] {
    Family f;
    int verdict = 0;
    const shatter_method m = method == "br"   ? SHATTER_METHOD_BOLLOBAS_RADCLIFFE
                             : method == "sm" ? SHATTER_METHOD_STANDARD_MONOMIALS
                                              : SHATTER_METHOD_DEFINITION;
    auto s = load_family(file, f);
    if (s == SHATTER_OK) s = shatter_is_extremal(f.get(), m, &verdict);
    if (s == SHATTER_OK) std::printf("%s\n", verdict ? "true" : "false");
    result = exit_code(s);
  });

  // graph
  auto* graph = app.add_subcommand("graph", "Labelled inclusion graph");
  add_file(graph);
  graph->add_flag("--dot", "DOT output (the only format)");
  graph->callback([&] {
    Family f;
    auto s = load_family(file, f);
    if (s == SHATTER_OK) {
      char* out = nullptr;
      s = shatter_graph_dot(f.get(), &out);
      print(out);
    }
    result = exit_code(s);
  });

  // tree encode | decode
  int tree_n = 0;
  bool tree_dot = false;
  auto* tree = app.add_subcommand("tree", "Convert between VC-dim 1 extremal families and labelled trees");
  tree->require_subcommand(1);
  auto* encode = tree->add_subcommand("encode", "Family file -> tree");
  add_file(encode);
  encode->add_flag("--dot", tree_dot, "DOT output");
  encode->callback([&] {
    Family f;
    Tree t;
    auto s = load_family(file, f);
    if (s == SHATTER_OK) s = shatter_tree_encode(f.get(), t.out());
    if (s == SHATTER_OK) {
      char* out = nullptr;
      s = tree_dot ? shatter_tree_dot(t.get(), &out) : shatter_tree_emit(t.get(), &out);
      print(out);
    }
    result = exit_code(s);
  });
  auto* decode = tree->add_subcommand("decode", "Tree file -> family");
  add_file(decode);
  add_format(decode);
  decode->add_option("--n", tree_n, "Ground set size (default: largest label)");
  decode->callback([&] {
    Tree t;
    Family f;
    auto s = load_tree(file, t);
    if (s == SHATTER_OK) s = shatter_tree_decode(t.get(), tree_n, f.out());
    result = s == SHATTER_OK ? emit_family(f, format) : exit_code(s);
  });

  // enumerate
  int enum_n = 0;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "All VC-dim <= 1 extremal families with full support");
  enumerate->add_option("--n", enum_n, "Ground set size (1..6)")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the count");
  add_format(enumerate);
  enumerate->callback([&] {
    EnumerateState state{format};
    std::uint64_t count = 0;
    const auto s = shatter_enumerate_vc1(enum_n, count_only ? nullptr : print_enumerated, &state, &count);
    if (count_only && (s == SHATTER_OK || s == SHATTER_E_FALSIFIED)) {
      std::printf("%llu\n", static_cast<unsigned long long>(count));
    }
    result = exit_code(s);
  });

  // groebner
  std::string order;
  std::string mode = "assembled";
  auto* groebner = app.add_subcommand("groebner", "Groebner basis of the vanishing ideal, with checks");
  add_file(groebner);
  groebner->add_option("--order", order, "Variable order, most significant first, e.g. 2,1,3");
  groebner->add_option("--mode", mode, "assembled: minimal pairs; full/adjacent: read off the tree")
      ->check(CLI::IsMember({"assembled", "full", "adjacent"}));
  groebner->callback([&] {
    Family f;
    auto s = load_family(file, f);
    if (s == SHATTER_OK) {
      std::vector<int> perm;
      try {
        perm = parse_order(order);
      } catch (const std::exception&) {
        std::fprintf(stderr, "error: bad --order '%s'\n", order.c_str());
        result = kExitInput;
        return;
      }
      const shatter_basis_mode m = mode == "full"       ? SHATTER_BASIS_FULL
                                   : mode == "adjacent" ? SHATTER_BASIS_ADJACENT
                                                        : SHATTER_BASIS_ASSEMBLED;
      char* out = nullptr;
      s = shatter_groebner_json(f.get(), perm.empty() ? nullptr : perm.data(), perm.size(), m, &out);
      print(out);
    }
    result = exit_code(s);
  });

  // project
  int t = 0;
  int window = 0;
  bool relaxed = false;
  auto* project = app.add_subcommand("project", "Lift a family from its projections and check the result");
  add_file(project);
  project->add_option("--t", t, "VC-dimension")->required();
  project->add_option("--window", window, "Projection size (default 2t+1)");
  project->add_flag("--relaxed", relaxed, "Allow VC-dimension below t; conclusions reported, not asserted");
  project->callback([&] {
    Family f;
    auto s = load_family(file, f);
    if (s == SHATTER_OK) {
      char* out = nullptr;
      s = shatter_project_json(f.get(), t, window, relaxed ? 1 : 0, &out);
      print(out);
    }
    result = exit_code(s);
  });

  // construct anstee | fq | downset
  int cn = 0, ct = 0, cl = 0;
  bool random_tree = false, steps = false;
  std::uint64_t seed = 0;
  auto* construct = app.add_subcommand("construct", "Build extremal families");
  construct->require_subcommand(1);
  auto* anstee = construct->add_subcommand("anstee", "Triangle-free family of size C(n,0)+C(n,1)+C(n,2)");
  anstee->add_option("--n", cn, "Ground set size (>= 2)")->required();
  anstee->add_flag("--random", random_tree, "Random spanning trees");
  anstee->add_option("--seed", seed, "Seed for --random");
  anstee->add_flag("--json", steps, "Print the family and every step as JSON");
  add_format(anstee);
  anstee->callback([&] {
    Family f;
    char* log = nullptr;
    const auto s = shatter_construct_anstee(cn, random_tree ? 1 : 0, seed, f.out(), steps ? &log : nullptr);
    if (steps) {
      print(log);
    } else if (f.get() != nullptr) {
      const int r = emit_family(f, format);
      if (r != kExitOk) {
        result = r;
        return;
      }
    }
    result = exit_code(s);
  });
  auto* fq = construct->add_subcommand("fq", "The family F(n,t,l) avoiding l-subset traces on t-sets");
  fq->add_option("--n", cn, "Ground set size")->required();
  fq->add_option("--t", ct, "Window size")->required();
  fq->add_option("--l", cl, "Trace layer")->required();
  add_format(fq);
  fq->callback([&] {
    Family f;
    const auto s = shatter_construct_fq(cn, ct, cl, f.out());
    result = s == SHATTER_OK ? emit_family(f, format) : exit_code(s);
  });
  auto* downset = construct->add_subcommand("downset", "Down-closure of a family");
  add_file(downset);
  add_format(downset);
  downset->callback([&] {
    Family f, d;
    auto s = load_family(file, f);
    if (s == SHATTER_OK) s = shatter_down_closure(f.get(), d.out());
    result = s == SHATTER_OK ? emit_family(d, format) : exit_code(s);
  });

  // peel
  bool peel_fq = false;
  std::string peel_file;
  auto* peel = app.add_subcommand("peel", "Remove members one by one, keeping extremality");
  peel->add_option("file", peel_file, "Set-system file, - for stdin");
  peel->add_flag("--fq", peel_fq, "Peel F(n,t,l) in its canonical order");
  peel->add_option("--n", cn, "Ground set size (with --fq)");
  peel->add_option("--t", ct, "Window size (with --fq)");
  peel->add_option("--l", cl, "Trace layer (with --fq)");
  peel->callback([&] {
    char* out = nullptr;
    shatter_status s = SHATTER_OK;
    if (peel_fq) {
      s = shatter_fq_peel_json(cn, ct, cl, &out);
    } else if (peel_file.empty()) {
      std::fprintf(stderr, "error: peel needs a file or --fq\n");
      result = kExitInput;
      return;
    } else {
      Family f;
      s = load_family(peel_file, f);
      if (s == SHATTER_OK) s = shatter_peel_json(f.get(), &out);
    }
    print(out);
    result = exit_code(s);
  });

  // conjecture
  int scan_n = 0;
  bool exhaustive = false;
  std::uint64_t random_count = 0;
  unsigned jobs = 1;
  auto* conjecture = app.add_subcommand("conjecture", "Search for extremal families with no removable member");
  conjecture->add_option("--n", scan_n, "Ground set size")->required();
  auto* ex = conjecture->add_flag("--exhaustive", exhaustive, "Every family on [n] (n <= 4)");
  auto* rnd = conjecture->add_option("--random", random_count, "Number of random extremal families (n <= 8)");
  ex->excludes(rnd);
  conjecture->add_option("--seed", seed, "Seed for --random");
  conjecture->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  conjecture->callback([&] {
    char* out = nullptr;
    const bool use_exhaustive = exhaustive || random_count == 0;
    const auto s = shatter_conjecture_json(scan_n, use_exhaustive ? 1 : 0, random_count, seed, jobs, &out);
    print(out);
    result = exit_code(s);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }
  return result;
}
