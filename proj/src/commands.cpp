// Copyright 2026 The skewpbw Authors
// SPDX-License-Identifier: Apache-2.0

#include "skewpbw/commands.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "skewpbw/corpus.hpp"
#include "skewpbw/diamond.hpp"
#include "skewpbw/error.hpp"
#include "skewpbw/presentio.hpp"
#include "skewpbw/skewcheck.hpp"

namespace skewpbw {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kXyz = {"x", "y", "z"};

struct Loaded {
  Presentation presentation;  // after --set substitution
  SkewSystem system;
  std::string digest;         // of the input, before substitution
  std::optional<std::string_view> corpus_name;
};

Loaded load(std::string_view text, const CommandOptions& opts) {
  Presentation parsed = parse_presentation(text);
  std::string digest = presentation_digest(parsed);
  auto name = corpus_name_for_digest(digest);
  Presentation p = substitute(parsed, opts.sets);
  SkewSystem q = build_system(p);
  return Loaded{std::move(p), std::move(q), std::move(digest), name};
}

Json base_json(const char* command) {
  Json j;
  j["tool"] = "skewpbw";
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

void describe_input(Report& r, const Loaded& in, const CommandOptions& opts) {
  r.json["digest"] = in.digest;
  r.json["paper_example"] =
      in.corpus_name ? Json(std::string(*in.corpus_name)) : Json(nullptr);
  r.json["generators"] = in.presentation.generators;
  if (!opts.sets.empty()) {
    Json sets = Json::object();
    for (const auto& [name, value] : opts.sets) sets[name] = to_string(value);
    r.json["set"] = std::move(sets);
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Indeterminate:
    case ErrorKind::Budget:
      return kExitIndeterminate;
    case ErrorKind::VerdictRequired:
      return kExitNegative;
    default:
      return kExitInputError;
  }
}

// Runs `body`, converting exceptions into an error report and appending
// timing when requested.
Report guarded(const char* command, const CommandOptions& opts,
               const std::function<void(Report&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.json = base_json(command);
  try {
    body(r);
  } catch (const ParseError& e) {
    r = Report{kExitInputError, base_json(command), ""};
    r.json["error"] = {{"kind", to_string(e.kind())},
                       {"message", e.message()},
                       {"line", e.line()},
                       {"column", e.column()}};
    r.text = std::string("error: ") + e.what() + "\n";
  } catch (const Error& e) {
    r = Report{exit_code_for(e.kind()), base_json(command), ""};
    r.json["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    r.text = std::string("error (") + to_string(e.kind()) + "): " + e.what() + "\n";
  } catch (const std::exception& e) {
    r = Report{kExitIndeterminate, base_json(command), ""};
    r.json["error"] = {{"kind", "internal"}, {"message", e.what()}};
    r.text = std::string("internal error: ") + e.what() + "\n";
  }
  if (opts.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    r.json["timing_ms"] = ms;
    std::ostringstream os;
    os << "timing: " << ms << " ms\n";
    r.text += os.str();
  }
  return r;
}

std::string triple_name(const Overlap& o, const std::vector<std::string>& g) {
  return Word{o.k, o.j, o.i}.str(g);
}

Json conditions_json(const ConditionReport& report,
                     const std::vector<std::string>& names) {
  Json rows = Json::array();
  for (const auto& rec : report.records) {
    Json row;
    row["label"] = rec.label;
    row["monomial"] = rec.monomial.str(names);
    row["lhs"] = rec.lhs.str();
    row["rhs"] = rec.rhs.str();
    row["satisfied"] = rec.satisfied;
    row["printed_lhs"] = rec.printed_lhs.str();
    row["printed_rhs"] = rec.printed_rhs.str();
    row["printed_satisfied"] = rec.printed_satisfied;
    row["erratum"] = rec.erratum;
    rows.push_back(std::move(row));
  }
  return Json{{"satisfied", report.satisfied()},
              {"printed_satisfied", report.printed_satisfied()},
              {"rows", std::move(rows)}};
}

std::string conditions_text(const ConditionReport& report,
                            const std::vector<std::string>& names) {
  std::string out;
  for (const auto& rec : report.records) {
    out += "  [" + rec.label + "] " + rec.monomial.str(names) + ": " +
           rec.lhs.str() + " = " + rec.rhs.str() +
           (rec.satisfied ? "  satisfied" : "  violated");
    if (rec.erratum) {
      out += "  (as printed: " + rec.printed_lhs.str() + " = " +
             rec.printed_rhs.str() +
             (rec.printed_satisfied ? ", satisfied)" : ", violated)");
    }
    out += '\n';
  }
  return out;
}

// Every word of length <= d over n letters, shortest first.
std::vector<Word> words_up_to(std::size_t n, std::size_t d) {
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (std::size_t len = 1; len <= d; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (std::size_t g = 0; g < n; ++g) {
        next.push_back(w * Word{static_cast<Letter>(g)});
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

std::pair<std::string, Rational> parse_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw Error(ErrorKind::Argument,
                "expected NAME=VALUE, got '" + std::string(text) + "'");
  }
  try {
    return {std::string(text.substr(0, eq)), parse_rational(text.substr(eq + 1))};
  } catch (const Error& e) {
    throw Error(ErrorKind::Argument, "bad value in '" + std::string(text) +
                                         "': " + e.what());
  }
}

Report cmd_check(std::string_view presentation, const CommandOptions& opts) {
  return guarded("check", opts, [&](Report& r) {
    const Loaded in = load(presentation, opts);
    const auto& names = in.presentation.generators;
    describe_input(r, in, opts);
    const PbwVerdict verdict = check_pbw(in.system);

    Json overlaps = Json::array();
    std::string text = "digest: " + in.digest;
    if (in.corpus_name) text += " (corpus: " + std::string(*in.corpus_name) + ")";
    text += '\n';
    for (const auto& w : verdict.witnesses) {
      const Overlap& o = w.overlap;
      overlaps.push_back({{"word", triple_name(o, names)},
                          {"triple", {o.k + 1, o.j + 1, o.i + 1}},
                          {"g", w.g.str(names)},
                          {"h", w.h.str(names)},
                          {"difference", w.difference.str(names)},
                          {"resolved", w.resolved()}});
      text += "overlap " + triple_name(o, names) +
              (w.resolved() ? ": resolved\n" : ": NOT resolved\n");
      text += "  g = " + w.g.str(names) + "\n";
      text += "  h = " + w.h.str(names) + "\n";
      text += "  g - h = " + w.difference.str(names) + "\n";
    }
    r.json["pbw"] = verdict.is_pbw;
    r.json["overlaps"] = std::move(overlaps);
    if (verdict.first_failure) {
      const Overlap& o = verdict.witnesses[*verdict.first_failure].overlap;
      r.json["first_failure"] = {o.k + 1, o.j + 1, o.i + 1};
    } else {
      r.json["first_failure"] = nullptr;
    }

    if (in.system.generator_count() == 3) {
      try {
        const ConditionReport cr =
            check_conditions(extract_coefficients(in.system));
        r.json["conditions"] = conditions_json(cr, names);
        text += std::string("conditions: ") +
                (cr.satisfied() ? "all satisfied" : "violated") + "\n" +
                conditions_text(cr, names);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Shape) throw;
      }
    }

    if (opts.oracle) {
      ExhaustiveLimits limits{opts.max_degree, opts.node_cap};
      std::vector<Word> words;
      for (const auto& w : verdict.witnesses) words.push_back(w.overlap.word());
      if (opts.max_degree >= 3 || words.empty()) {
        for (auto& w : words_up_to(in.system.generator_count(), opts.max_degree)) {
          words.push_back(std::move(w));
        }
      }
      std::size_t checked = 0;
      bool failing_overlap_split = false;
      Json non_unique = Json::array();
      for (std::size_t k = 0; k < words.size(); ++k) {
        const NCPoly f = NCPoly::monomial(in.system.generator_count(),
                                          Scalar(1L), words[k]);
        const auto forms = normal_forms_exhaustive(f, in.system, limits);
        ++checked;
        if (forms.size() > 1) {
          if (verdict.first_failure &&
              words[k] ==
                  verdict.witnesses[*verdict.first_failure].overlap.word()) {
            failing_overlap_split = true;
          }
          if (non_unique.size() < 8) {
            Json nf = Json::array();
            for (const auto& g : forms) nf.push_back(g.str(names));
            non_unique.push_back({{"word", words[k].str(names)},
                                  {"normal_forms", std::move(nf)}});
          }
        }
      }
      const bool all_unique = non_unique.empty();
      const bool agrees = verdict.is_pbw ? all_unique : failing_overlap_split;
      r.json["oracle"] = {{"max_degree", opts.max_degree},
                          {"words_checked", checked},
                          {"all_unique", all_unique},
                          {"agrees", agrees},
                          {"non_unique", std::move(non_unique)}};
      text += "oracle: " + std::to_string(checked) + " words, " +
              (all_unique ? "unique normal forms" : "non-unique normal forms") +
              (agrees ? ", agrees with verdict\n" : ", DISAGREES with verdict\n");
    }
    text += std::string("pbw: ") + (verdict.is_pbw ? "true" : "false") + "\n";
    r.text = std::move(text);
    r.exit_code = verdict.is_pbw ? kExitSuccess : kExitNegative;
  });
}

Report cmd_normal_form(std::string_view presentation, std::string_view expr,
                       const CommandOptions& opts) {
  return guarded("normal-form", opts, [&](Report& r) {
    const Loaded in = load(presentation, opts);
    const auto& names = in.presentation.generators;
    describe_input(r, in, opts);
    const NCPoly f =
        parse_expression(expr, in.presentation.generators, in.presentation.context);
    const StandardForm sf = stred(f, in.system);
    r.json["input"] = f.str(names);
    r.json["normal_form"] = sf.poly.str(names);
    r.text = sf.poly.str(names) + "\n";
    if (opts.trace) {
      Json steps = Json::array();
      std::istringstream lines(sf.trace.str(names));
      for (std::string line; std::getline(lines, line);) steps.push_back(line);
      r.json["trace"] = std::move(steps);
      r.text += sf.trace.str(names);
    }
  });
}

Report cmd_classify(std::string_view presentation, const CommandOptions& opts) {
  return guarded("classify", opts, [&](Report& r) {
    const Loaded in = load(presentation, opts);
    describe_input(r, in, opts);
    const SkewCoefficients c = extract_coefficients(in.system);
    const bool pbw = check_pbw(in.system).is_pbw;
    r.json["pbw"] = pbw;
    if (!pbw) {
      r.json["classification"] = nullptr;
      r.text = "not PBW: classification refused\n";
      r.exit_code = kExitNegative;
      return;
    }
    const Classification cl = classify(c, in.system);
    const std::string letter(1, cl.case_letter);
    r.json["classification"] = {
        {"case", letter},
        {"subcase", cl.subcase ? Json(*cl.subcase) : Json(nullptr)},
        {"alpha", cl.alpha.str()},
        {"beta", cl.beta.str()},
        {"gamma", cl.gamma.str()},
        {"notes", cl.notes}};
    r.text = "case: " + letter;
    if (cl.subcase) r.text += ", subcase: " + *cl.subcase;
    r.text += "\nalpha = " + cl.alpha.str() + ", beta = " + cl.beta.str() +
              ", gamma = " + cl.gamma.str() + "\n";
    for (const auto& note : cl.notes) r.text += "note: " + note + "\n";
  });
}

Report cmd_derive_conditions(const CommandOptions& opts) {
  return guarded("derive-conditions", opts, [&](Report& r) {
    const Derivation d = derive_conditions();
    const auto table = condition_table();
    Json ids = Json::array();
    std::string text;
    for (const auto& id : d.identities) {
      Json row{{"label", id.label},
               {"monomial", id.monomial.str(kXyz)},
               {"lhs", id.lhs.str()},
               {"rhs", id.rhs.str()}};
      text += "[" + id.label + "] " + id.monomial.str(kXyz) + ": " +
              id.lhs.str() + " = " + id.rhs.str() + "\n";
      for (const auto& spec : table) {
        if (spec.label != id.label) continue;
        row["erratum"] = spec.erratum();
        if (spec.erratum()) {
          row["printed"] = std::string(spec.printed_lhs) + " = " +
                           std::string(spec.printed_rhs);
          text += "    as printed: " + std::string(spec.printed_lhs) + " = " +
                  std::string(spec.printed_rhs) + "\n";
        }
      }
      ids.push_back(std::move(row));
    }
    r.json["identities"] = std::move(ids);
    r.json["leading"] = {{"monomial", "x*y*z"},
                         {"lhs", d.leading_lhs.str()},
                         {"rhs", d.leading_rhs.str()}};
    r.text = std::move(text);

    if (opts.verify) {
      const DerivationCheck check = verify_derivation(d);
      r.json["verify"] = {{"match", check.matches_printed()},
                          {"corrected_match", check.matches_corrected()},
                          {"ten_identities", check.ten_identities},
                          {"expected_monomials", check.expected_monomials},
                          {"leading_cancels", check.leading_cancels},
                          {"mismatches", check.printed_mismatches},
                          {"corrected_mismatches", check.corrected_mismatches}};
      const auto joined = [](const std::vector<std::string>& labels) {
        std::string out;
        for (const auto& l : labels) out += (out.empty() ? "" : ", ") + l;
        return out;
      };
      r.text += std::string("match: ") +
                (check.matches_printed()
                     ? "true"
                     : "false (" + joined(check.printed_mismatches) + ")") +
                "\n";
      r.text += std::string("corrected match: ") +
                (check.matches_corrected()
                     ? "true"
                     : "false (" + joined(check.corrected_mismatches) + ")") +
                "\n";
      if (!check.matches_printed()) r.exit_code = kExitNegative;
    }

    if (opts.substitute_text) {
      const Loaded in = load(*opts.substitute_text, opts);
      describe_input(r, in, opts);
      const ConditionReport cr = check_conditions(extract_coefficients(in.system));
      r.json["substitution"] = conditions_json(cr, in.presentation.generators);
      r.text += std::string("substitution: ") +
                (cr.satisfied() ? "all satisfied" : "violated") + "\n" +
                conditions_text(cr, in.presentation.generators);
      if (!cr.satisfied()) r.exit_code = kExitNegative;
    }
  });
}

}  // namespace skewpbw
