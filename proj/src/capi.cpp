// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#include "skewpbw/skewpbw.h"

#include <new>
#include <string>

#include "skewpbw/commands.hpp"
#include "skewpbw/corpus.hpp"
#include "skewpbw/error.hpp"
#include "skewpbw/presentio.hpp"

struct skp_presentation {
  skewpbw::Presentation value;
  std::string rendered;
  std::string digest;
};

struct skp_options {
  skewpbw::CommandOptions value;
};

struct skp_report {
  skewpbw::Report value;
  std::string json_cache;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError g_last_error;

void clear_error() { g_last_error = LastError{}; }

skp_status fail(skp_status status, std::string message, std::size_t line = 0,
                std::size_t column = 0) {
  g_last_error = LastError{std::move(message), line, column};
  return status;
}

skp_status status_for(skewpbw::ErrorKind kind) {
  using skewpbw::ErrorKind;
  switch (kind) {
    case ErrorKind::Parse:
      return SKP_ERR_PARSE;
    case ErrorKind::Argument:
      return SKP_ERR_ARGUMENT;
    case ErrorKind::Budget:
      return SKP_ERR_BUDGET;
    case ErrorKind::Indeterminate:
      return SKP_ERR_INDETERMINATE;
    default:
      return SKP_ERR_INVALID;
  }
}

template <typename Fn>
skp_status run_command(skp_report** out, Fn&& fn) {
  if (out == nullptr) return fail(SKP_ERR_NULL, "null output pointer");
  *out = nullptr;
  try {
    *out = new skp_report{fn(), {}};
  } catch (const std::bad_alloc&) {
    return fail(SKP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SKP_ERR_INTERNAL, e.what());
  }
  clear_error();
  return SKP_OK;
}

const skewpbw::CommandOptions& options_of(const skp_options* o) {
  static const skewpbw::CommandOptions defaults;
  return o ? o->value : defaults;
}

}  // namespace

extern "C" {

const char* skp_version(void) { return skewpbw::kVersion; }

const char* skp_last_error_message(void) { return g_last_error.message.c_str(); }
size_t skp_last_error_line(void) { return g_last_error.line; }
size_t skp_last_error_column(void) { return g_last_error.column; }

skp_status skp_presentation_parse(const char* text, skp_presentation** out) {
  if (text == nullptr || out == nullptr) return fail(SKP_ERR_NULL, "null argument");
  *out = nullptr;
  try {
    auto p = skewpbw::parse_presentation(text);
    skewpbw::build_system(p);
    auto* h = new skp_presentation{std::move(p), {}, {}};
    h->rendered = skewpbw::render_presentation(h->value);
    h->digest = skewpbw::presentation_digest(h->value);
    *out = h;
  } catch (const skewpbw::ParseError& e) {
    return fail(SKP_ERR_PARSE, e.message(), e.line(), e.column());
  } catch (const skewpbw::Error& e) {
    return fail(status_for(e.kind()), e.what());
  } catch (const std::exception& e) {
    return fail(SKP_ERR_INTERNAL, e.what());
  }
  clear_error();
  return SKP_OK;
}

void skp_presentation_free(skp_presentation* p) { delete p; }

const char* skp_presentation_render(const skp_presentation* p) {
  return p ? p->rendered.c_str() : nullptr;
}

const char* skp_presentation_digest(const skp_presentation* p) {
  return p ? p->digest.c_str() : nullptr;
}

skp_options* skp_options_new(void) { return new (std::nothrow) skp_options{}; }

void skp_options_free(skp_options* o) { delete o; }

skp_status skp_options_set_param(skp_options* o, const char* assignment) {
  if (o == nullptr || assignment == nullptr) {
    return fail(SKP_ERR_NULL, "null argument");
  }
  try {
    o->value.sets.push_back(skewpbw::parse_assignment(assignment));
  } catch (const skewpbw::Error& e) {
    return fail(status_for(e.kind()), e.what());
  }
  clear_error();
  return SKP_OK;
}

void skp_options_set_oracle(skp_options* o, int enabled) {
  if (o) o->value.oracle = enabled != 0;
}
void skp_options_set_max_degree(skp_options* o, size_t d) {
  if (o) o->value.max_degree = d;
}
void skp_options_set_node_cap(skp_options* o, size_t cap) {
  if (o) o->value.node_cap = cap;
}
void skp_options_set_trace(skp_options* o, int enabled) {
  if (o) o->value.trace = enabled != 0;
}
void skp_options_set_timing(skp_options* o, int enabled) {
  if (o) o->value.timing = enabled != 0;
}
void skp_options_set_verify(skp_options* o, int enabled) {
  if (o) o->value.verify = enabled != 0;
}
void skp_options_set_substitute(skp_options* o, const char* text) {
  if (o == nullptr) return;
  if (text) {
    o->value.substitute_text = std::string(text);
  } else {
    o->value.substitute_text.reset();
  }
}

skp_status skp_check(const char* text, const skp_options* options,
                     skp_report** out) {
  if (text == nullptr) return fail(SKP_ERR_NULL, "null presentation text");
  return run_command(out, [&] { return skewpbw::cmd_check(text, options_of(options)); });
}

skp_status skp_normal_form(const char* text, const char* expr,
                           const skp_options* options, skp_report** out) {
  if (text == nullptr || expr == nullptr) return fail(SKP_ERR_NULL, "null argument");
  return run_command(out, [&] {
    return skewpbw::cmd_normal_form(text, expr, options_of(options));
  });
}

skp_status skp_classify(const char* text, const skp_options* options,
                        skp_report** out) {
  if (text == nullptr) return fail(SKP_ERR_NULL, "null presentation text");
  return run_command(out,
                     [&] { return skewpbw::cmd_classify(text, options_of(options)); });
}

skp_status skp_derive_conditions(const skp_options* options, skp_report** out) {
  return run_command(
      out, [&] { return skewpbw::cmd_derive_conditions(options_of(options)); });
}

int skp_report_exit_code(const skp_report* r) {
  return r ? r->value.exit_code : skewpbw::kExitInputError;
}

const char* skp_report_text(const skp_report* r) {
  return r ? r->value.text.c_str() : nullptr;
}

const char* skp_report_json(skp_report* r, int indent) {
  if (r == nullptr) return nullptr;
  r->json_cache = r->value.json.dump(indent < 0 ? -1 : indent);
  return r->json_cache.c_str();
}

void skp_report_free(skp_report* r) { delete r; }

const char* skp_corpus_lookup(const char* digest) {
  if (digest == nullptr) return nullptr;
  try {
    auto name = skewpbw::corpus_name_for_digest(digest);
    return name ? name->data() : nullptr;
  } catch (const std::exception&) {
    return nullptr;
  }
}

const char* skp_corpus_text(const char* name) {
  if (name == nullptr) return nullptr;
  auto e = skewpbw::find_corpus_entry(name);
  return e ? e->text.data() : nullptr;
}

}  // extern "C"
