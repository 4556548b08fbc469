#include "musico/cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "musico/document.h"
#include "musico/generalize.h"
#include "musico/render.h"
#include "musico/theorems.h"

namespace musico {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  f << text;
  f.close();
  if (!f) {
    err << "error: failed writing " << path << "\n";
    return false;
  }
  return true;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

TriadPattern parse_base(const std::string& s) {
  if (s == "c-major" || s == "major") return TriadPattern::Major;
  if (s == "c-minor" || s == "minor") return TriadPattern::Minor;
  throw UsageError("unknown base scale: " + s);
}

Generation parse_generation(const std::string& s) {
  if (s == "first") return Generation::First;
  if (s == "second") return Generation::Second;
  throw UsageError("unknown generation: " + s);
}

Family parse_family(const std::string& s) {
  if (s == "chromatic") return Family::Chromatic;
  if (s == "pythagorean") return Family::Pythagorean;
  throw UsageError("unknown family: " + s);
}

std::string appendix_name(const GeneralizedScaleFamily& fam, const GeneralizedScale& s) {
  for (AppendixListing l : all_appendix_listings()) {
    if (l == AppendixListing::TriadLists) continue;
    const AppendixTable& t = appendix_table(l);
    if (t.base != fam.base || t.generation != fam.generation) continue;
    for (const auto& e : t.entries)
      if (ToneSet(e.tones.begin(), e.tones.end()) == s.tones) return e.name;
  }
  return "-";
}

}  // namespace

ConstraintSet parse_constraints(std::string_view text) {
  ConstraintSet c;
  for (const std::string& token : split(text, ',')) {
    std::vector<std::string> parts = split(token, ':');
    bool cyclic = true;
    if (parts.size() > 1 && parts.back() == "open") {
      cyclic = false;
      parts.pop_back();
    }
    if (parts.size() == 1 && parts[0] == "chromatic") {
      c.cycles.push_back(chromatic_cycle(cyclic));
    } else if (parts.size() == 1 && parts[0] == "pythagorean") {
      c.cycles.push_back(pythagorean_cycle(cyclic));
    } else if (parts.size() == 2 && parts[0] == "wholetone") {
      c.cycles.push_back(whole_tone_cycle(parse_tone(parts[1]), cyclic));
    } else {
      throw UsageError("unknown constraint: " + token);
    }
  }
  return c;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Musical icosahedra: enumeration, verification and drawing"};
  app.require_subcommand(1);

  bool quiet = false, verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run every check; exit 3 if any fails");
  verify->add_flag("--quiet", quiet, "Only print the summary line");
  verify->add_flag("--json", verify_json, "Print the report as JSON");

  std::string constraints;
  bool no_symmetry = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List isomorphism classes satisfying neighboring constraints");
  enumerate_cmd->add_option("--constraints", constraints, "e.g. chromatic,wholetone:C")->required();
  enumerate_cmd->add_flag("--no-symmetry", no_symmetry, "Do not require hexagon-icosahedron symmetry");

  auto* types = app.add_subcommand("types", "Print the 12 reference types");

  std::string type_text, scale_name = "major", root_text = "C", triad_name, output;
  auto* render = app.add_subcommand("render", "Draw a type with a highlighted scale (SVG or DOT)");
  render->add_option("--type", type_text, "Type label, e.g. 1, 2', 3*")->required();
  render->add_option("--scale", scale_name, "Catalog scale name");
  render->add_option("--root", root_text, "Root tone");
  render->add_option("--triad", triad_name, "Also fill this triad on the root");
  render->add_option("-o,--output", output, "Output file (.svg or .dot)")->required();

  std::string base = "c-major", gen = "first", family = "chromatic";
  auto* generalize = app.add_subcommand("generalize", "Generalized scales from the stabilizer of C");
  generalize->add_option("--base", base, "c-major or c-minor");
  generalize->add_option("--gen", gen, "first or second");
  generalize->add_option("--family", family, "chromatic or pythagorean");

  std::vector<std::string> tones;
  auto* classify = app.add_subcommand("classify", "Triangle kind of three tones on a type");
  classify->add_option("--type", type_text, "Type label")->required();
  classify->add_option("tones", tones, "Three tones")->required()->expected(3);

  std::string report_path;
  auto* report = app.add_subcommand("report", "Write the verification report as JSON");
  report->add_option("-o,--output", report_path, "Output JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*verify) {
      const VerificationReport rep = run_all();
      if (verify_json) {
        out << rep.to_json();
      } else if (quiet) {
        out << "summary: " << rep.passed_count() << " passed, " << rep.failed_count() << " failed\n";
      } else {
        out << rep.to_text();
      }
      if (!rep.all_passed()) {
        for (const auto& r : rep.results) {
          if (r.passed) continue;
          err << "FAILED " << r.name << "\n";
          for (const auto& c : r.counterexamples) err << "  - " << c << "\n";
        }
        return kExitVerifyFailed;
      }
      return kExitOk;
    }

    if (*enumerate_cmd) {
      ConstraintSet c = parse_constraints(constraints);
      c.symmetry_required = !no_symmetry;
      const EnumerationResult res = enumerate(c);
      std::vector<AssignmentDocument> docs;
      for (const auto& cls : res.classes) {
        docs.push_back(make_document(cls.representative, classify_type(cls.representative, reference_types())));
      }
      out << to_json(docs);
      return kExitOk;
    }

    if (*types) {
      std::vector<AssignmentDocument> docs;
      for (const auto& [label, a] : reference_types().all()) docs.push_back(make_document(a, label));
      out << to_json(docs);
      return kExitOk;
    }

    if (*render) {
      const TypeLabel label = parse_type_label(type_text);
      const Assignment& a = reference_types().at(label);
      const Tone root = parse_tone(root_text);
      RenderSpec spec{a, {}, label};
      spec.highlights.push_back({figure_of(a, scale(scale_name, root)), "#d62728", false, scale_name});
      if (!triad_name.empty()) {
        const TriadTones t = triad_at(catalog().triad(triad_name), root);
        spec.highlights.push_back({figure_of(a, std::vector<Tone>(t.begin(), t.end()), true), "#2ca02c", true, triad_name});
      }
      std::string text;
      if (ends_with(output, ".svg")) {
        text = render_svg(spec);
      } else if (ends_with(output, ".dot")) {
        text = render_dot(spec);
      } else {
        throw UsageError("output must end in .svg or .dot");
      }
      return write_file(output, text, err) ? kExitOk : kExitIo;
    }

    if (*generalize) {
      const GeneralizedScaleFamily fam =
          stabilizer_orbit_scales(parse_base(base), parse_generation(gen), parse_family(family));
      out << to_string(fam.generation) << " generalization of C-" << to_string(fam.base) << " ("
          << to_string(fam.family) << ", type " << to_string(fam.source) << ")\n";
      for (const auto& s : fam.entries) {
        out << appendix_name(fam, s) << ": " << join_names(s.ascending) << " (";
        for (std::size_t i = 0; i < s.triads.size(); ++i) {
          out << (i ? ", " : "") << join_names(s.triads[i].tones(), "");
        }
        out << ")\n";
      }
      return kExitOk;
    }

    if (*classify) {
      const TypeLabel label = parse_type_label(type_text);
      const Assignment& a = reference_types().at(label);
      TriadTones t{parse_tone(tones[0]), parse_tone(tones[1]), parse_tone(tones[2])};
      const TriangleKind k = triad_kind(a, t);
      out << to_string(k.shape) << "\n";
      if (k.apex) out << "apex: " << a.tone_at(*k.apex).name() << "\n";
      return kExitOk;
    }

    if (*report) {
      return write_file(report_path, run_all().to_json(), err) ? kExitOk : kExitIo;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace musico
