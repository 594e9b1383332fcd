#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holomorphy/automorphisms.hpp"
#include "holomorphy/cayley.hpp"
#include "holomorphy/holomorph.hpp"
#include "holomorphy/verify.hpp"

namespace {

using holomorphy::AutData;
using holomorphy::HolContext;
using holomorphy::HolElem;

HolElem parse_elem(const HolContext& ctx, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || comma == 0 ||
      comma + 1 == text.size()) {
    throw std::invalid_argument("element must be written as a,b; got '" +
                                text + "'");
  }
  std::int64_t a = 0;
  std::int64_t b = 0;
  try {
    std::size_t used = 0;
    a = std::stoll(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    b = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("element must be written as a,b; got '" +
                                text + "'");
  }
  return ctx.elem(a, b);
}

std::uint64_t max_order_limit() {
  const char* raw = std::getenv("HOLOMORPHY_MAX_ORDER");
  if (raw == nullptr) return 2000;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed == 0) {
    throw std::invalid_argument(
        "HOLOMORPHY_MAX_ORDER must be a positive integer, got '" +
        std::string(raw) + "'");
  }
  return parsed;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << j.dump(2) << "\n";
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

holomorphy::CayleyGroup build_aut_table(const HolContext& ctx) {
  const std::vector<AutData> auts = holomorphy::enumerate_aut(ctx);
  const std::size_t size = auts.size();
  std::vector<std::int32_t> table(size * size);
  std::vector<std::string> labels;
  labels.reserve(size);
  auto index = [&](const AutData& alpha) {
    return static_cast<std::int32_t>(
        ctx.index_of(holomorphy::psi(ctx, alpha)));
  };
  for (std::size_t i = 0; i < size; ++i) {
    labels.push_back("aut(" + std::to_string(auts[i].c) + "," +
                     std::to_string(auts[i].j) + ")");
    for (std::size_t j = 0; j < size; ++j) {
      table[i * size + j] =
          index(holomorphy::compose(ctx, auts[i], auts[j]));
    }
  }
  const std::vector<std::int32_t> gens{
      index(holomorphy::psi_inverse(ctx, ctx.x())),
      index(holomorphy::psi_inverse(ctx, ctx.y()))};
  return holomorphy::CayleyGroup(size, std::move(table), 0, gens,
                                 std::move(labels));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic and verified structure of Hol(C_n) for n = 2 p^e"};
  app.require_subcommand(1);

  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
  auto add_context_options = [&](CLI::App* sub) {
    sub->add_option("--n", n, "group parameter, must be 2 * p^e (p an odd prime)")
        ->required();
    sub->add_option("--k", k,
                    "generator override: a unit of maximal order mod n "
                    "(default: the least one)");
  };

  std::string lhs_text;
  std::string rhs_text;
  std::uint64_t exponent = 0;

  CLI::App* mul = app.add_subcommand("mul", "multiply two elements a,b");
  add_context_options(mul);
  mul->add_option("lhs", lhs_text, "left factor as a,b")->required();
  mul->add_option("rhs", rhs_text, "right factor as a,b")->required();

  CLI::App* pow = app.add_subcommand("pow", "raise an element to a power");
  add_context_options(pow);
  pow->add_option("elem", lhs_text, "element as a,b")->required();
  pow->add_option("m", exponent, "nonnegative exponent")->required();

  CLI::App* inv = app.add_subcommand("inv", "invert an element");
  add_context_options(inv);
  inv->add_option("elem", lhs_text, "element as a,b")->required();

  CLI::App* order = app.add_subcommand("order", "order of an element");
  add_context_options(order);
  order->add_option("elem", lhs_text, "element as a,b")->required();

  std::string suites_text;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string report_path;
  CLI::App* verify =
      app.add_subcommand("verify", "run verification suites and report");
  add_context_options(verify);
  verify->add_option("--suites", suites_text,
                     "comma-separated suite names (default: all except "
                     "completeness-odd)");
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed, "seed for sampled checks (default 0)");
  verify->add_option("--out", report_path,
                     "write the report to this file instead of stdout");

  std::string what;
  std::string out_path;
  CLI::App* export_cmd =
      app.add_subcommand("export", "write a multiplication table as JSON");
  add_context_options(export_cmd);
  export_cmd->add_option("--what", what, "which table to export")
      ->required()
      ->check(CLI::IsMember({"hol-table", "aut-table", "dihedral-table"}));
  export_cmd->add_option("--out", out_path, "output file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::uint64_t max_order = max_order_limit();

    if (mul->parsed()) {
      const HolContext ctx = HolContext::make(n, k);
      const HolElem result =
          ctx.mul(parse_elem(ctx, lhs_text), parse_elem(ctx, rhs_text));
      std::cout << ctx.format(result) << "\n";
      return 0;
    }
    if (pow->parsed()) {
      const HolContext ctx = HolContext::make(n, k);
      std::cout << ctx.format(ctx.power(parse_elem(ctx, lhs_text), exponent))
                << "\n";
      return 0;
    }
    if (inv->parsed()) {
      const HolContext ctx = HolContext::make(n, k);
      std::cout << ctx.format(ctx.inverse(parse_elem(ctx, lhs_text)))
                << "\n";
      return 0;
    }
    if (order->parsed()) {
      const HolContext ctx = HolContext::make(n, k);
      std::cout << ctx.element_order(parse_elem(ctx, lhs_text)) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      std::vector<holomorphy::SuiteId> suites;
      if (suites_text.empty()) {
        suites = holomorphy::default_suites();
      } else {
        for (const std::string& name : split_csv(suites_text)) {
          const auto id = holomorphy::suite_from_name(name);
          if (!id) {
            std::cerr << "error: unknown suite '" << name << "'; known:";
            for (const auto& [sid, sname] : holomorphy::suite_registry()) {
              std::cerr << " " << sname;
            }
            std::cerr << "\n";
            return 2;
          }
          suites.push_back(*id);
        }
      }
      holomorphy::VerifyOptions options;
      options.k = k;
      options.seed = seed;
      options.max_order = max_order;
      const holomorphy::VerificationReport report =
          holomorphy::run_suites(n, suites, options);
      const std::string rendered = format == "json"
                                       ? report.to_json().dump(2) + "\n"
                                       : report.to_text();
      if (report_path.empty()) {
        std::cout << rendered;
      } else {
        std::ofstream out(report_path);
        if (!out) {
          throw std::runtime_error("cannot open '" + report_path +
                                   "' for writing");
        }
        out << rendered;
      }
      return report.all_passed() ? 0 : 1;
    }

    if (export_cmd->parsed()) {
      if (what == "dihedral-table") {
        if (2 * n > max_order) {
          throw std::domain_error(
              "export: dihedral table of size " + std::to_string(2 * n) +
              " exceeds the limit of " + std::to_string(max_order));
        }
        write_json_file(out_path, holomorphy::build_dihedral(n).to_json());
        return 0;
      }
      const HolContext ctx = HolContext::make(n, k);
      if (ctx.group_order() > max_order) {
        throw std::domain_error(
            "export: table of size " + std::to_string(ctx.group_order()) +
            " exceeds the limit of " + std::to_string(max_order) +
            " (raise HOLOMORPHY_MAX_ORDER to override)");
      }
      if (what == "hol-table") {
        write_json_file(out_path,
                        holomorphy::build_holomorph_table(ctx).to_json());
      } else {
        write_json_file(out_path, build_aut_table(ctx).to_json());
      }
      return 0;
    }
  } catch (const holomorphy::ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
