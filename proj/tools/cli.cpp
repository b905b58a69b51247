#include "cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>

#include "hyps/error.hpp"
#include "hyps/hypersym.hpp"
#include "hyps/json_io.hpp"
#include "hyps/muord.hpp"
#include "hyps/pel.hpp"
#include "hyps/strata.hpp"
#include "hyps/weil.hpp"

namespace hyps::cli {

namespace {

constexpr std::array kInputCommands = {"check-balanced", "check-symmetric", "check-star", "verdict",
                                       "restrict",       "transfer",        "hypotheses", "muord",
                                       "weil"};

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string datum_text(const PELSlopeDatum& d) {
  std::string out;
  for (std::size_t i = 0; i < d.polygons().size(); ++i) {
    out += d.tower().upper_places()[i] + " " + to_exponent_string(d.polygons()[i]) + "\n";
  }
  return out;
}

struct Rendered {
  Json json;
  std::string text;
};

Rendered predicate(const char* key, bool value) {
  return {Json{{key, value}}, std::string(key) + ": " + bool_text(value) + "\n"};
}

void add_zeta_b(Rendered& r, const Invocation& inv, const PELSlopeDatum& d) {
  if (!inv.brauer) return;
  const bool zeta = is_zeta_B(d, *inv.brauer);
  r.json["zeta_b"] = zeta;
  r.text += "zeta_b: " + bool_text(zeta) + "\n";
}

Rendered evaluate_datum_command(const Invocation& inv, const PELSlopeDatum& d) {
  const auto& cmd = inv.command;
  if (cmd == "check-balanced") {
    auto r = predicate("balanced", is_balanced(d));
    add_zeta_b(r, inv, d);
    return r;
  }
  if (cmd == "check-symmetric") return predicate("symmetric", is_B_symmetric(d));
  if (cmd == "check-star") return predicate("condition_star", condition_star(d));
  if (cmd == "verdict") {
    const auto v = hypersymmetric_verdict(d);
    Rendered r{verdict_to_json(v), "level: " + std::string(to_string(v.level)) + "\n"};
    if (v.witness) {
      for (std::size_t c = 0; c < v.witness->components.size(); ++c) {
        const auto& comp = v.witness->components[c];
        r.text += "component " + std::to_string(c + 1) + ":";
        for (std::size_t i = 0; i < comp.polygons().size(); ++i) {
          r.text += " " + comp.tower().upper_places()[i] + "=" + to_exponent_string(comp.polygons()[i]);
        }
        r.text += "\n";
      }
    }
    add_zeta_b(r, inv, d);
    return r;
  }
  if (cmd == "restrict") {
    const auto restricted = restrict(d);
    return {datum_to_json(restricted), datum_text(restricted)};
  }
  if (cmd == "transfer") {
    const auto t = std::string(to_string(subfield_transfer(d)));
    return {Json{{"transfer", t}}, "transfer: " + t + "\n"};
  }
  // hypotheses
  const auto report = theorem_checklist(d);
  return {theorem_report_to_json(report),
          "hyp1_hypersymmetric: " + bool_text(report.hyp1_hypersymmetric) + "\n" +
              "hyp2_branch: " + std::string(to_string(report.hyp2_branch)) + "\n" +
              "satisfied: " + bool_text(report.satisfied) + "\n"};
}

Rendered evaluate(const Invocation& inv, std::string_view input) {
  const auto& cmd = inv.command;
  if (cmd == "muord") {
    const auto result = mu_ordinary(signature_from_json(parse_json(input)));
    std::string text;
    for (const auto& [name, polygon] : result) text += name + " " + to_exponent_string(polygon) + "\n";
    return {mu_ordinary_to_json(result), text};
  }
  if (cmd == "weil") {
    const auto slopes = weil_input_from_json(parse_json(input));
    const auto e = weil_parameters(slopes);
    std::string text = "a: " + std::to_string(e.a) + "\nc: " + std::to_string(e.c) + "\n";
    for (std::size_t i = 0; i < e.per_pair.size(); ++i) {
      const auto& p = e.per_pair[i];
      text += slopes.pairs()[i].w + "/" + slopes.pairs()[i].wbar + " m=" + std::to_string(p.m) +
              " n=" + std::to_string(p.n) + "\n";
    }
    return {weil_to_json(slopes, e), text};
  }
  if (cmd == "poset") {
    const auto poset = build_poset(enumerate_siegel(inv.g));
    std::string text;
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
      text += "n" + std::to_string(i) + " " + to_exponent_string(poset.nodes[i]);
      if (i == poset.basic_index) text += " [basic]";
      if (i == poset.ordinary_index) text += " [mu-ordinary]";
      text += "\n";
    }
    for (const auto& [from, to] : poset.cover_edges) {
      text += "n" + std::to_string(from) + " < n" + std::to_string(to) + "\n";
    }
    return {poset_to_json(poset), text};
  }
  if (cmd == "bw") {
    const auto p = bueltel_wedhorn(inv.n, inv.r, inv.scaling);
    return {Json{{"polygon", polygon_to_json(p)}}, to_exponent_string(p) + "\n"};
  }
  return evaluate_datum_command(inv, datum_from_json(parse_json(input)));
}

// Commands without an input document are identified by their parameters.
std::string digest_source(const Invocation& inv, std::string_view input) {
  if (inv.command == "poset") return "poset g=" + std::to_string(inv.g);
  if (inv.command == "bw") {
    return "bw n=" + std::to_string(inv.n) + " r=" + std::to_string(inv.r) +
           " scaling=" + std::string(to_string(inv.scaling));
  }
  return std::string(input);
}

}  // namespace

bool reads_input(std::string_view command) {
  return std::find(kInputCommands.begin(), kInputCommands.end(), command) != kInputCommands.end();
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

Outcome execute(const Invocation& inv, std::string_view input_bytes) {
  Outcome outcome;
  try {
    if (inv.command == "poset" && inv.dot) {
      outcome.out = to_dot(build_poset(enumerate_siegel(inv.g)));
      return outcome;
    }
    auto rendered = evaluate(inv, input_bytes);
    if (inv.format == Format::Text) {
      outcome.out = std::move(rendered.text);
    } else {
      Json doc{{"command", inv.command},
               {"input_digest", "sha256:" + sha256_hex(digest_source(inv, input_bytes))},
               {"result", std::move(rendered.json)}};
      outcome.out = doc.dump(2) + "\n";
    }
  } catch (const Error& e) {
    outcome = Outcome{2, "", "hyps " + inv.command + ": " + std::string(errc_name(e.code())) + ": " +
                                 e.what() + "\n"};
  } catch (const std::exception& e) {
    outcome = Outcome{1, "", "hyps " + inv.command + ": internal error: " + e.what() + "\n"};
  }
  return outcome;
}

Outcome run(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin) {
  CLI::App app{"Newton polygon and hypersymmetry decision procedures", "hyps"};
  app.require_subcommand(1);

  Invocation inv;
  std::string input_path;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"text", Format::Text}};
  const std::map<std::string, Scaling> scalings{{"literal", Scaling::Literal},
                                                {"times_r", Scaling::TimesR}};

  std::string format = "json";
  auto common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("--input,-i", input_path, "Input JSON file (default: stdin)");
    sub->add_option("--format,-f", format, "Output format: json or text")->check(CLI::IsMember(formats));
  };

  struct Command {
    const char* name;
    const char* help;
  };
  const std::array<Command, 9> datum_like{{
      {"check-balanced", "Is the datum B-balanced?"},
      {"check-symmetric", "Is the datum B-symmetric?"},
      {"check-star", "Does the datum satisfy condition (*)?"},
      {"verdict", "Hypersymmetric-existence verdict with balanced decomposition"},
      {"restrict", "Restrict slope data from F to F0"},
      {"transfer", "Does F-hypersymmetry descend to F0?"},
      {"hypotheses", "Check the Hecke-orbit theorem hypotheses"},
      {"muord", "mu-ordinary Newton polygons from a multiplication type"},
      {"weil", "Weil-number exponents for prescribed CM slopes"},
  }};
  for (const auto& spec : datum_like) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    common(sub, true);
    if (std::string_view(spec.name) == "check-balanced" || std::string_view(spec.name) == "verdict") {
      sub->add_option("--brauer", inv.brauer, "Order of the Brauer class; also report the zeta_B test")
          ->check(CLI::PositiveNumber);
    }
  }
  auto* poset = app.add_subcommand("poset", "Siegel Newton strata poset for genus g");
  common(poset, false);
  poset->add_option("--g", inv.g, "Genus")->required()->check(CLI::NonNegativeNumber);
  poset->add_flag("--dot", inv.dot, "Emit a Graphviz digraph");

  auto* bw = app.add_subcommand("bw", "Admissible polygon N(r) + (1/2)^(n-2r), signature (1,n-1)");
  common(bw, false);
  bw->add_option("--n", inv.n, "n")->required();
  bw->add_option("--r", inv.r, "r")->required();
  std::string scaling = "literal";
  bw->add_option("--scaling", scaling, "Exponent reading of N(r): literal or times_r")
      ->check(CLI::IsMember(scalings));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return Outcome{0, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    std::string where;
    for (const auto* sub : app.get_subcommands()) where = sub->get_name() + ": ";
    return Outcome{2, "", "hyps: " + where + e.what() + "\n"};
  }

  inv.command = app.get_subcommands().front()->get_name();
  inv.scaling = scalings.at(scaling);
  inv.format = formats.at(format);
  std::string input;
  if (reads_input(inv.command)) {
    if (!input_path.empty()) {
      std::ifstream file(input_path, std::ios::binary);
      if (!file) return Outcome{2, "", "hyps " + inv.command + ": cannot open " + input_path + "\n"};
      std::ostringstream buffer;
      buffer << file.rdbuf();
      input = buffer.str();
      inv.input_path = input_path;
    } else {
      input = read_stdin();
    }
  }
  return execute(inv, input);
}

}  // namespace hyps::cli
