#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "affine_abacus.hpp"

using namespace affine_abacus;

namespace {

constexpr int kValidationExit = 2;
constexpr int kUsageExit = 1;
constexpr int kPosetBound = 8;

struct Common {
  std::string family;
  int rank = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--family", c.family, "C~/C, B~/B, B~/D, D~/D (or CC, BB, BD, DD)")
      ->required()
      ->check([](const std::string& s) { return parse_family(s) ? std::string() : "unknown family " + s; });
  sub->add_option("--rank", c.rank, "rank n")->required();
}

GroupContext context_of(const Common& c) { return make_context(*parse_family(c.family), c.rank); }

const auto kRepCheck = [](const std::string& s) {
  return parse_representation(s) ? std::string() : "expected window|levels|core|bounded|word|root";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal coset representatives of affine Weyl quotients"};
  app.require_subcommand(1);

  Common cc;
  std::string from = "window";
  std::string to = "core";
  std::string value;
  auto* conv = app.add_subcommand("convert", "convert an element between representations");
  add_common(conv, cc);
  conv->add_option("--from", from, "input representation")->check(kRepCheck);
  conv->add_option("--to", to, "output representation")->check(kRepCheck);
  conv->add_option("value", value, "the element, e.g. -11,-9,-1,8,16,18")->required();

  Common ec;
  int max_len = 0;
  auto* en = app.add_subcommand("enumerate", "all elements up to a length, one JSON object per line");
  add_common(en, ec);
  en->add_option("--max-len", max_len, "largest length")->required()->check(CLI::NonNegativeNumber);

  Common rc;
  std::string rfrom = "window";
  std::string rvalue;
  std::string target = "core";
  std::string format = "text";
  bool residues = true;
  auto* rend = app.add_subcommand("render", "draw an abacus, core, bounded partition or peel trace");
  add_common(rend, rc);
  rend->add_option("--from", rfrom, "input representation")->check(kRepCheck);
  rend->add_option("--render", target, "abacus|core|bounded|peel-trace")
      ->check(CLI::IsMember({"abacus", "core", "bounded", "peel-trace"}));
  rend->add_option("--format", format, "text|svg")->check(CLI::IsMember({"text", "svg"}));
  rend->add_flag("--residues,!--no-residues", residues, "print residues in boxes");
  rend->add_option("value", rvalue, "the element")->required();

  Common pc;
  int pmax = 0;
  auto* pos = app.add_subcommand("poset", "Bruhat order covers as a DOT digraph");
  add_common(pos, pc);
  pos->add_option("--max-len", pmax, "largest length")->required()->check(CLI::Range(0, kPosetBound));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc_code = app.exit(e);
    return rc_code == 0 ? 0 : kUsageExit;
  }

  try {
    if (*conv) {
      const auto ctx = context_of(cc);
      const auto el = parse_element(ctx, *parse_representation(from), value);
      std::cout << format_value(convert(el, *parse_representation(to))) << "\n";
    } else if (*en) {
      const auto ctx = context_of(ec);
      const auto table = enumerate_quotient(ctx, max_len);
      for (const auto& w : table.elements()) std::cout << describe(w).dump() << "\n";
    } else if (*rend) {
      const auto ctx = context_of(rc);
      const auto el = parse_element(ctx, *parse_representation(rfrom), rvalue);
      const auto fmt = *parse_render_format(format);
      switch (*parse_render_target(target)) {
        case RenderTarget::Abacus:
          std::cout << render_abacus(std::get<Abacus>(convert(el, Representation::Levels).value), fmt);
          break;
        case RenderTarget::Core:
          std::cout << render_core(std::get<CorePartition>(convert(el, Representation::Core).value), fmt, residues);
          break;
        case RenderTarget::Bounded:
          std::cout << render_bounded(std::get<BoundedPartition>(convert(el, Representation::Bounded).value), fmt,
                                      residues);
          break;
        case RenderTarget::PeelTrace:
          std::cout << render_peel_trace(std::get<CorePartition>(convert(el, Representation::Core).value), fmt,
                                         residues);
          break;
      }
    } else if (*pos) {
      std::cout << poset(context_of(pc), pmax);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kValidationExit;
  }
  return 0;
}
