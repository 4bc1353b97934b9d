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

#include "shatter/shatter.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "shatter/constructions.hpp"
#include "shatter/core_sets.hpp"
#include "shatter/errors.hpp"
#include "shatter/formats.hpp"
#include "shatter/inclusion_graph.hpp"
#include "shatter/reports.hpp"
#include "shatter/standard_monomials.hpp"
#include "shatter/transforms.hpp"

struct shatter_family {
  shatter::SetSystem value;
};

struct shatter_tree {
  shatter::LabeledTree value;
};

namespace {

thread_local std::string last_error;

shatter_status from_code(shatter::ErrorCode code) {
  return static_cast<shatter_status>(static_cast<int>(code) + 1);
}

template <typename Fn>
shatter_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const shatter::Error& e) {
    last_error = e.what();
    return from_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SHATTER_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SHATTER_E_INTERNAL;
  }
}

shatter_status invalid(const char* what) {
  last_error = what;
  return SHATTER_E_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

shatter_family* wrap(shatter::SetSystem f) { return new shatter_family{std::move(f)}; }

shatter_status falsified_unless(bool ok, const char* what) {
  if (ok) return SHATTER_OK;
  last_error = what;
  return SHATTER_E_FALSIFIED;
}

}  // namespace

extern "C" {

const char* shatter_last_error(void) { return last_error.c_str(); }

const char* shatter_status_name(shatter_status status) {
  switch (status) {
    case SHATTER_OK:
      return "OK";
    case SHATTER_E_INVALID_ARGUMENT:
      return "InvalidArgument";
    case SHATTER_E_INTERNAL:
      return "Internal";
    default:
      break;
  }
  if (status > SHATTER_OK && status <= SHATTER_E_FALSIFIED) {
    return shatter::error_code_name(static_cast<shatter::ErrorCode>(status - 1)).data();
  }
  return "Unknown";
}

int shatter_status_is_consistency_failure(shatter_status status) {
  if (status > SHATTER_OK && status <= SHATTER_E_FALSIFIED) {
    return shatter::is_consistency_failure(static_cast<shatter::ErrorCode>(status - 1)) ? 1 : 0;
  }
  return 0;
}

void shatter_string_free(char* s) { std::free(s); }

shatter_status shatter_family_parse(const char* text, shatter_family** out) {
  if (text == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = wrap(shatter::parse_family(text));
    return SHATTER_OK;
  });
}

shatter_status shatter_family_read_file(const char* path, shatter_family** out) {
  if (path == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = wrap(shatter::parse_family(shatter::read_file(path)));
    return SHATTER_OK;
  });
}

shatter_status shatter_family_from_masks(int n, const uint32_t* masks, size_t count, shatter_family** out) {
  if ((masks == nullptr && count != 0) || out == nullptr) return invalid("null argument");
  return guarded([&] {
    shatter::check_ground_size(n);
    *out = wrap(shatter::SetSystem(n, std::vector<shatter::Mask>(masks, masks + count)));
    return SHATTER_OK;
  });
}

void shatter_family_free(shatter_family* f) { delete f; }

int shatter_family_ground_size(const shatter_family* f) { return f == nullptr ? 0 : f->value.ground_size(); }

size_t shatter_family_size(const shatter_family* f) { return f == nullptr ? 0 : f->value.size(); }

size_t shatter_family_masks(const shatter_family* f, uint32_t* out, size_t capacity) {
  if (f == nullptr || out == nullptr) return 0;
  const size_t k = std::min(capacity, f->value.size());
  std::copy_n(f->value.begin(), k, out);
  return k;
}

shatter_status shatter_family_emit(const shatter_family* f, shatter_format format, char** out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(format == SHATTER_FORMAT_JSON ? shatter::emit_family_json(f->value) + "\n"
                                                    : shatter::emit_ss(f->value));
    return SHATTER_OK;
  });
}

shatter_status shatter_shattered(const shatter_family* f, shatter_family** out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = wrap(shatter::shattered_family(f->value));
    return SHATTER_OK;
  });
}

shatter_status shatter_strongly_shattered(const shatter_family* f, shatter_family** out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = wrap(shatter::strongly_shattered(f->value));
    return SHATTER_OK;
  });
}

shatter_status shatter_vc_dimension(const shatter_family* f, int* out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = shatter::vc_dimension(f->value);
    return SHATTER_OK;
  });
}

shatter_status shatter_is_extremal(const shatter_family* f, shatter_method method, int* out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    switch (method) {
      case SHATTER_METHOD_DEFINITION:
        *out = shatter::is_extremal(f->value);
        break;
      case SHATTER_METHOD_BOLLOBAS_RADCLIFFE:
        *out = shatter::is_extremal_br(f->value);
        break;
      case SHATTER_METHOD_STANDARD_MONOMIALS:
        *out = shatter::extremality_via_sm_exact(f->value);
        break;
      default:
        return invalid("unknown method");
    }
    return SHATTER_OK;
  });
}

shatter_status shatter_analyze_json(const shatter_family* f, char** out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    const auto report = shatter::analyze(f->value);
    *out = dup_string(shatter::to_json(report).dump(2) + "\n");
    return falsified_unless(report.agree, "extremality verdicts disagree");
  });
}

shatter_status shatter_graph_dot(const shatter_family* f, char** out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(shatter::graph_to_dot(shatter::build_inclusion_graph(f->value)));
    return SHATTER_OK;
  });
}

shatter_status shatter_tree_parse(const char* text, shatter_tree** out) {
  if (text == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new shatter_tree{shatter::parse_tree(text)};
    return SHATTER_OK;
  });
}

shatter_status shatter_tree_read_file(const char* path, shatter_tree** out) {
  if (path == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new shatter_tree{shatter::parse_tree(shatter::read_file(path))};
    return SHATTER_OK;
  });
}

void shatter_tree_free(shatter_tree* t) { delete t; }

shatter_status shatter_tree_emit(const shatter_tree* t, char** out) {
  if (t == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(shatter::emit_tree(t->value));
    return SHATTER_OK;
  });
}

shatter_status shatter_tree_dot(const shatter_tree* t, char** out) {
  if (t == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = dup_string(shatter::tree_to_dot(t->value));
    return SHATTER_OK;
  });
}

shatter_status shatter_tree_encode(const shatter_family* f, shatter_tree** out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new shatter_tree{shatter::encode_family(f->value)};
    return SHATTER_OK;
  });
}

shatter_status shatter_tree_decode(const shatter_tree* t, int n, shatter_family** out) {
  if (t == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = wrap(shatter::decode_tree(t->value, n));
    return SHATTER_OK;
  });
}

shatter_status shatter_enumerate_vc1(int n, shatter_family_callback callback, void* user, uint64_t* count) {
  return guarded([&] {
    struct Stop {};
    std::uint64_t seen = 0;
    bool stopped = false;
    try {
      seen = shatter::enumerate_vc1_extremal(n, [&](const shatter::SetSystem& f) {
        if (callback == nullptr) return;
        const shatter_family handle{f};
        if (callback(&handle, user) != 0) throw Stop{};
      });
    } catch (const Stop&) {
      stopped = true;
    }
    if (count != nullptr) *count = seen;
    if (stopped) return SHATTER_OK;
    return falsified_unless(seen == shatter::vc1_extremal_count_formula(n),
                            "enumeration count differs from 2^n (n+1)^(n-2)");
  });
}

uint64_t shatter_vc1_count_formula(int n) {
  try {
    return shatter::vc1_extremal_count_formula(n);
  } catch (...) {
    return 0;
  }
}

shatter_status shatter_groebner_json(const shatter_family* f, const int* order, size_t order_len,
                                     shatter_basis_mode mode, char** out) {
  if (f == nullptr || out == nullptr || (order == nullptr && order_len != 0)) return invalid("null argument");
  return guarded([&] {
    const shatter::LexOrder ord = order == nullptr ? shatter::LexOrder::identity(f->value.ground_size())
                                                   : shatter::LexOrder(std::vector<int>(order, order + order_len));
    shatter::BasisMode m = shatter::BasisMode::kAssembled;
    switch (mode) {
      case SHATTER_BASIS_ASSEMBLED:
        break;
      case SHATTER_BASIS_FULL:
        m = shatter::BasisMode::kFull;
        break;
      case SHATTER_BASIS_ADJACENT:
        m = shatter::BasisMode::kAdjacent;
        break;
      default:
        return invalid("unknown basis mode");
    }
    const auto report = shatter::groebner_report(f->value, ord, m);
    *out = dup_string(shatter::to_json(report).dump(2) + "\n");
    return falsified_unless(!report.falsified, "Groebner basis check failed");
  });
}

shatter_status shatter_project_json(const shatter_family* f, int t, int window, int relaxed, char** out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    const auto report = shatter::verify_lift(f->value, t, {relaxed != 0, window});
    *out = dup_string(shatter::to_json(report).dump(2) + "\n");
    return falsified_unless(!report.falsified, "lifting conclusion failed");
  });
}

shatter_status shatter_construct_anstee(int n, int random_tree, uint64_t seed, shatter_family** out,
                                        char** steps_json) {
  if (out == nullptr) return invalid("null argument");
  return guarded([&] {
    const auto result = shatter::anstee_construct(
        n, random_tree != 0 ? shatter::TreeStrategy::kSeededRandom : shatter::TreeStrategy::kDeterministicMin, seed);
    bool ok = true;
    for (const auto& step : result.steps) {
      ok = ok && step.new_shattered == std::vector<shatter::Mask>{step.a ^ step.b};
    }
    ok = ok && shatter::is_extremal(result.family);
    if (steps_json != nullptr) *steps_json = dup_string(shatter::to_json(result).dump(2) + "\n");
    *out = wrap(result.family);
    return falsified_unless(ok, "Anstee step did not add exactly A xor B to Sh");
  });
}

shatter_status shatter_construct_fq(int n, int t, int l, shatter_family** out) {
  if (out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = wrap(shatter::furedi_quinn(n, t, l).family);
    return SHATTER_OK;
  });
}

shatter_status shatter_down_closure(const shatter_family* f, shatter_family** out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = wrap(shatter::down_closure(f->value));
    return SHATTER_OK;
  });
}

shatter_status shatter_peel_json(const shatter_family* f, char** out) {
  if (f == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    const auto report = shatter::peel_sequence(f->value);
    *out = dup_string(shatter::to_json(report).dump(2) + "\n");
    return falsified_unless(report.complete(), "greedy peel got stuck");
  });
}

shatter_status shatter_fq_peel_json(int n, int t, int l, char** out) {
  if (out == nullptr) return invalid("null argument");
  return guarded([&] {
    const auto report = shatter::fq_peel(n, t, l);
    *out = dup_string(shatter::to_json(report).dump(2) + "\n");
    bool ok = report.complete();
    for (std::size_t k = 0; k < report.order.size(); ++k) {
      ok = ok && report.eliminated_shattered[k] == std::vector<shatter::Mask>{report.index_sets[k]};
    }
    return falsified_unless(ok, "peel order broke extremality");
  });
}

shatter_status shatter_conjecture_json(int n, int exhaustive, uint64_t random_count, uint64_t seed, unsigned jobs,
                                       char** out) {
  if (out == nullptr) return invalid("null argument");
  return guarded([&] {
    shatter::ScanOptions opts;
    opts.exhaustive = exhaustive != 0;
    opts.random_count = random_count;
    opts.seed = seed;
    opts.jobs = jobs;
    const auto report = shatter::conjecture_scan(n, opts);
    *out = dup_string(shatter::to_json(report).dump(2) + "\n");
    return falsified_unless(!report.falsified(), "found an extremal family without a removable member");
  });
}

}  // extern "C"
