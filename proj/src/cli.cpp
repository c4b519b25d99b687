#include "demazure/cli.hpp"

#include "demazure/branching.hpp"
#include "demazure/operators.hpp"
#include "demazure/theorems.hpp"
#include "demazure/weylgroup.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace demazure {

namespace {

Coords parse_coords(const std::string& text) {
  Coords out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("malformed weight vector '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("malformed weight vector '" + text + "'");
  return out;
}

std::vector<Coords> parse_parts(const std::string& text) {
  std::vector<Coords> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_coords(item));
  if (out.empty()) throw std::invalid_argument("malformed partition '" + text + "'");
  return out;
}

Coords resize_to(const Coords& c, int n, const char* what) {
  if (static_cast<int>(c.size()) != n)
    throw std::invalid_argument(std::string(what) + " must have " + std::to_string(n) +
                                " coordinates");
  return c;
}

struct CharRequest {
  std::string algebra;
  std::int64_t level = 1;
  std::string coweight;
  std::string weight;
  std::string format = "json";
};

// Demazure character for t_{-nu(coweight)} applied to
// level*Lambda_0 + sum_i weight_i Lambda_i.
std::pair<std::int64_t, FiniteCharacter> compute_char(CharRequest& req) {
  const CartanData& aff = get_cartan(affinize(AlgebraLabel::parse(req.algebra)));
  req.algebra = aff.label.str();
  Coords cov = resize_to(parse_coords(req.coweight), aff.n, "coweight");
  Coords L(aff.dim(), 0);
  L[0] = req.level;
  if (!req.weight.empty()) {
    Coords w = resize_to(parse_coords(req.weight), aff.n, "weight");
    for (int i = 1; i <= aff.n; ++i) L[i] = w[i - 1];
  }
  return project_to_finite(demazure_character(aff, cov, L));
}

int emit_reports(const std::vector<VerificationReport>& reports, bool timings,
                 std::ostream& out) {
  bool all_pass = true;
  for (const VerificationReport& r : reports) {
    out << to_json(r, timings) << '\n';
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Demazure character engine for affine Kac-Moody algebras"};
  app.require_subcommand(1);

  CharRequest creq;
  bool timings = false;

  auto add_char_options = [&](CLI::App* sub) {
    sub->add_option("--algebra", creq.algebra, "algebra label, e.g. A1^1 or C2")->required();
    sub->add_option("--level", creq.level, "coefficient of Lambda_0")->required();
    sub->add_option("--coweight", creq.coweight,
                    "dominant coweight, comma-separated fundamental coordinates")
        ->required();
    sub->add_option("--weight", creq.weight,
                    "optional finite dominant weight added as sum w_i Lambda_i");
    sub->add_option("--format", creq.format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
  };

  CLI::App* cmd_char = app.add_subcommand("char", "Demazure character of t_{-nu(coweight)}");
  add_char_options(cmd_char);

  CLI::App* cmd_dec = app.add_subcommand("decompose", "decompose the Demazure character");
  add_char_options(cmd_dec);

  std::string w_algebra, w_coweight;
  CLI::App* cmd_word = app.add_subcommand("word", "reduced word of t_{-nu(coweight)}");
  cmd_word->add_option("--algebra", w_algebra)->required();
  cmd_word->add_option("--coweight", w_coweight)->required();

  std::string l_algebra, l_weight = "";
  std::int64_t l_level = 1, l_trunc = 0;
  CLI::App* cmd_limit = app.add_subcommand("limit", "truncated limit-identity check");
  cmd_limit->add_option("--algebra", l_algebra)->required();
  cmd_limit->add_option("--level", l_level, "r in r*Lambda_0 + lambda")->required();
  cmd_limit->add_option("--weight", l_weight, "finite dominant lambda (default 0)");
  cmd_limit->add_option("--truncation", l_trunc, "number of tensor factors N")->required();
  cmd_limit->add_flag("--timings", timings, "include elapsed_ms in reports");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run verification instances");
  cmd_verify->require_subcommand(1);
  std::string v_algebra, v_parts;
  std::int64_t v_level = 1, v_shift = 1;
  int v_node = -1, v_z = -1;
  int v_max_rank = 4;
  std::int64_t v_max_level = 2;
  auto vsub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = cmd_verify->add_subcommand(name, help);
    s->add_flag("--timings", timings, "include elapsed_ms in reports");
    return s;
  };
  CLI::App* v_thm1 = vsub("thm1", "tensor factorization over a partition");
  v_thm1->add_option("--algebra", v_algebra)->required();
  v_thm1->add_option("--level", v_level)->required();
  v_thm1->add_option("--parts", v_parts, "semicolon-separated dominant coweights")->required();
  CLI::App* v_thm1a = vsub("thm1a", "factorization with minuscule basepoint shift");
  v_thm1a->add_option("--algebra", v_algebra)->required();
  v_thm1a->add_option("--level", v_level, "m")->required();
  v_thm1a->add_option("--shift", v_shift, "s")->required();
  v_thm1a->add_option("--node", v_node, "minuscule node i")->required();
  v_thm1a->add_option("--parts", v_parts, "remaining dominant coweights");
  CLI::App* v_thm2 = vsub("thm2", "fundamental-coweight decomposition");
  v_thm2->add_option("--algebra", v_algebra)->required();
  v_thm2->add_option("--node", v_node)->required();
  v_thm2->add_option("--level", v_level)->required();
  CLI::App* v_hilf8 = vsub("hilf8", "w_0 z s_0 column of theta-multiples");
  v_hilf8->add_option("--algebra", v_algebra)->required();
  v_hilf8->add_option("--level", v_level, "r")->required();
  v_hilf8->add_option("--z", v_z, "node index of z = s_i in Stab_W(Theta)");
  CLI::App* v_wmod = vsub("wmodule", "trivial-summand uniqueness of W");
  v_wmod->add_option("--algebra", v_algebra)->required();
  v_wmod->add_option("--level", v_level, "r")->required();
  CLI::App* v_tw = vsub("twisted", "twisted factorization at a special vertex");
  v_tw->add_option("--algebra", v_algebra)->required();
  v_tw->add_option("--node", v_node, "special vertex k (default 0)");
  v_tw->add_option("--level", v_level)->required();
  v_tw->add_option("--parts", v_parts, "dominant M_k elements")->required();
  CLI::App* v_twe = vsub("twisted-expected", "twisted decomposition list");
  v_twe->add_option("--algebra", v_algebra)->required();
  v_twe->add_option("--node", v_node)->required();
  v_twe->add_option("--level", v_level)->required();
  CLI::App* v_all = vsub("all", "run the standard verification grid");
  v_all->add_option("--max-rank", v_max_rank, "cap on the finite rank");
  v_all->add_option("--max-level", v_max_level, "cap on the level");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*cmd_char) {
      auto [lv, ch] = compute_char(creq);
      if (creq.format == "tsv")
        out << to_tsv(ch);
      else
        out << to_json(ch, creq.algebra, lv) << '\n';
      return 0;
    }
    if (*cmd_dec) {
      auto [lv, ch] = compute_char(creq);
      IrrDecomposition dec = decompose(ch);
      if (creq.format == "tsv") {
        for (const auto& [w, m] : dec.parts) {
          for (std::int64_t v : w) out << v << '\t';
          out << m << '\t' << weyl_dimension(*ch.fs, w) << '\n';
        }
      } else {
        out << to_json(*ch.fs, dec) << '\n';
      }
      return 0;
    }
    if (*cmd_word) {
      const CartanData& aff = get_cartan(affinize(AlgebraLabel::parse(w_algebra)));
      Coords cov = resize_to(parse_coords(w_coweight), aff.n, "coweight");
      ReducedWord w = peel_reduced_word(translation_element(aff, cov));
      nlohmann::json j;
      j["letters"] = w.letters;
      if (w.tail_is_identity())
        j["sigma"] = "id";
      else
        j["sigma"] = w.tail;
      out << j.dump() << '\n';
      return 0;
    }
    if (*cmd_limit) {
      AlgebraLabel al = AlgebraLabel::parse(l_algebra);
      Coords lambda = l_weight.empty() ? Coords(al.rank, 0)
                                       : resize_to(parse_coords(l_weight), al.rank, "weight");
      return emit_reports({verify_limit(al, l_level, lambda, l_trunc)}, timings, out);
    }
    if (*v_thm1)
      return emit_reports(
          {verify_thm1(AlgebraLabel::parse(v_algebra), v_level, parse_parts(v_parts))},
          timings, out);
    if (*v_thm1a)
      return emit_reports({verify_thm1a(AlgebraLabel::parse(v_algebra), v_level, v_shift,
                                        v_node,
                                        v_parts.empty() ? std::vector<Coords>{}
                                                        : parse_parts(v_parts))},
                          timings, out);
    if (*v_thm2)
      return emit_reports({verify_thm2(AlgebraLabel::parse(v_algebra), v_node, v_level)},
                          timings, out);
    if (*v_hilf8)
      return emit_reports({lemma_hilf8_check(AlgebraLabel::parse(v_algebra), v_level, v_z)},
                          timings, out);
    if (*v_wmod)
      return emit_reports({verify_wmodule(AlgebraLabel::parse(v_algebra), v_level)}, timings,
                          out);
    if (*v_tw)
      return emit_reports({verify_twisted_thm(AlgebraLabel::parse(v_algebra),
                                              v_node < 0 ? 0 : v_node, v_level,
                                              parse_parts(v_parts))},
                          timings, out);
    if (*v_twe)
      return emit_reports(
          {verify_twisted_expected(AlgebraLabel::parse(v_algebra), v_node, v_level)},
          timings, out);
    if (*v_all)
      return emit_reports(run_tasks(standard_grid(v_max_rank, v_max_level)), timings, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace demazure
