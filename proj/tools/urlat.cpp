// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.
//
// Command-line driver: construction, verification, decomposition,
// enumeration, frame/embedding checks, and signature/downset queries over
// the textual formats defined in the io module.
//
// Exit codes: 0 success, 1 structured failure (violated law, failed
// hypothesis), 2 malformed input or invocation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "urlat/analyze.hpp"
#include "urlat/construct.hpp"
#include "urlat/finalg.hpp"
#include "urlat/frames.hpp"
#include "urlat/io.hpp"
#include "urlat/varieties.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw urlat::Error(urlat::Err::SyntaxError, "cannot open file: " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw urlat::Error(urlat::Err::SyntaxError,
                       "cannot open output file: " + out_path);
  }
  out << text;
}

void emit_algebra(const urlat::FinRL& R, const std::string& format,
                  const std::string& out_path) {
  write_output(out_path, format == "json" ? urlat::render_frl_json(R)
                                          : urlat::render_frl(R));
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) continue;
    out.push_back(std::stoi(cur));
  }
  return out;
}

std::vector<long long> parse_ll_list(const std::string& text) {
  std::vector<long long> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) continue;
    out.push_back(std::stoll(cur));
  }
  return out;
}

/// key=value emitter that can also mirror itself into a JSON object.
struct Report {
  std::ostringstream text;
  ordered_json json = ordered_json::object();

  void add(const std::string& key, const std::string& value) {
    text << key << "=" << value << "\n";
    json[key] = value;
  }
  void add(const std::string& key, bool value) {
    text << key << "=" << (value ? "true" : "false") << "\n";
    json[key] = value;
  }
  void add(const std::string& key, long long value) {
    text << key << "=" << value << "\n";
    json[key] = value;
  }
  void add(const std::string& key, const std::vector<int>& value) {
    text << key << "=" << join_ints(value) << "\n";
    json[key] = value;
  }
  void emit(const std::string& format, const std::string& out_path) const {
    write_output(out_path,
                 format == "json" ? json.dump(2) + "\n" : text.str());
  }
};

urlat::Monoid group_from_factors(const std::vector<long long>& factors) {
  urlat::Monoid g = urlat::make_cyclic_group(1);
  for (long long f : factors) {
    if (f < 2) {
      throw urlat::Error(urlat::Err::InvalidFactor,
                         "invariant factors must be >= 2",
                         {static_cast<int>(f)});
    }
    g = urlat::monoid_product(g, urlat::make_cyclic_group(static_cast<int>(f)));
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"urlat: a workbench for finite residuated lattices"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string format = "frl";
  std::string out_path;

  // ---- check -------------------------------------------------------------
  auto* cmd_check = app.add_subcommand("check", "verify every algebra law");
  std::string check_file;
  std::string check_format = "frl";
  cmd_check->add_option("file", check_file, "algebra file or '-'")->required();
  cmd_check->add_option("--format", check_format, "frl|json");
  cmd_check->callback([&] {
    urlat::RawAlgebra raw = urlat::parse_frl_raw(read_input(check_file));
    urlat::CheckedAlgebra checked = urlat::check_raw_algebra(raw);
    if (check_format == "json") {
      ordered_json laws = ordered_json::array();
      for (const auto& law : checked.report.laws) {
        ordered_json j;
        j["law"] = law.law;
        j["pass"] = law.pass;
        j["witness"] = law.witness;
        j["note"] = law.note;
        laws.push_back(j);
      }
      std::cout << laws.dump(2) << "\n";
    } else {
      for (const auto& law : checked.report.laws) {
        std::cout << law.law << (law.pass ? " pass" : " FAIL");
        if (!law.witness.empty()) {
          std::cout << " witness=" << join_ints(law.witness);
        }
        if (!law.note.empty()) std::cout << " note=" << law.note;
        std::cout << "\n";
      }
    }
    exit_code = checked.report.all_pass() ? 0 : 1;
  });

  // ---- make --------------------------------------------------------------
  auto* cmd_make = app.add_subcommand("make", "construct an algebra");
  cmd_make->require_subcommand(1);
  cmd_make->add_option("--format", format, "frl|json");
  cmd_make->add_option("--out", out_path, "output file (default stdout)");

  auto* mk_rab = cmd_make->add_subcommand(
      "rab", "glued algebra over an abelian group with a zero adjoined");
  std::string rab_factors;
  int rab_kind = 0;
  mk_rab->add_option("--factors", rab_factors,
                     "invariant factors, e.g. 2,2 (empty = trivial group)");
  mk_rab->add_option("--kind", rab_kind, "glued block kind 0..3")
      ->check(CLI::Range(0, 3));
  mk_rab->callback([&] {
    urlat::Monoid g = group_from_factors(parse_ll_list(rab_factors));
    urlat::Monoid a = urlat::adjoin_zero(g);
    emit_algebra(
        urlat::make_rab(a, a.n - 1, static_cast<urlat::ZKind>(rab_kind)),
        format, out_path);
  });

  auto* mk_mg = cmd_make->add_subcommand(
      "mg", "bounded algebra of an abelian group (kind-0 gluing)");
  std::string mg_factors;
  mk_mg->add_option("--factors", mg_factors, "invariant factors, e.g. 2,2");
  mk_mg->callback([&] {
    emit_algebra(urlat::make_mg(parse_int_list(mg_factors)), format, out_path);
  });

  auto* mk_cyclic = cmd_make->add_subcommand(
      "cyclic", "one-generator linear algebra with index r and period s");
  int cy_r = 0, cy_s = 1;
  std::string cy_orient = "up";
  mk_cyclic->add_option("--r", cy_r, "index (>= 0)")->required();
  mk_cyclic->add_option("--s", cy_s, "period (>= 1)")->required();
  mk_cyclic->add_option("--orient", cy_orient, "up|down")
      ->check(CLI::IsMember({"up", "down"}));
  mk_cyclic->callback([&] {
    emit_algebra(urlat::make_cyclic_url(cy_r, cy_s,
                                        cy_orient == "up"
                                            ? urlat::Orientation::Up
                                            : urlat::Orientation::Down),
                 format, out_path);
  });

  auto* mk_mx = cmd_make->add_subcommand(
      "mx", "nth enumerated algebra on the bounded antichain lattice");
  int mx_size = 0, mx_index = 0, mx_jobs = 1;
  mk_mx->add_option("--x-size", mx_size, "antichain size")->required();
  mk_mx->add_option("--index", mx_index, "class index (enumeration order)");
  mk_mx->add_option("--jobs", mx_jobs, "worker threads");
  mk_mx->callback([&] {
    auto all = urlat::enumerate_mx(mx_size, std::nullopt, mx_jobs);
    if (mx_index < 0 || mx_index >= static_cast<int>(all.size())) {
      throw urlat::Error(urlat::Err::SemanticError,
                         "class index out of range", {mx_index});
    }
    emit_algebra(all[mx_index], format, out_path);
  });

  auto* mk_cocycle = cmd_make->add_subcommand(
      "cocycle",
      "trivial-twist extension of a chain algebra by a cyclic group");
  std::string co_a;
  int co_k = 2;
  mk_cocycle->add_option("--a", co_a, "chain algebra file or '-'")->required();
  mk_cocycle->add_option("--k-order", co_k, "cyclic group order (>= 1)");
  mk_cocycle->callback([&] {
    urlat::CocycleData data;
    data.A = urlat::parse_frl(read_input(co_a));
    data.K = urlat::make_cyclic_group(co_k);
    data.phi.assign(co_k, std::vector<int>(data.A.n));
    for (auto& row : data.phi) {
      for (int i = 0; i < data.A.n; ++i) row[i] = i;
    }
    data.f.assign(static_cast<std::size_t>(co_k) * co_k, data.A.unit);
    emit_algebra(urlat::make_cocycle_extension(data), format, out_path);
  });

  // ---- decompose ----------------------------------------------------------
  auto* cmd_dec = app.add_subcommand(
      "decompose", "factor an antichain algebra into its two blocks");
  std::string dec_file;
  std::string dec_format = "frl";
  cmd_dec->add_option("file", dec_file, "algebra file or '-'")->required();
  cmd_dec->add_option("--format", dec_format, "frl|json");
  cmd_dec->callback([&] {
    urlat::FinRL R = urlat::parse_frl(read_input(dec_file));
    urlat::ABDecomposition d = urlat::decompose_mx(R);
    Report rep;
    rep.add("kind", static_cast<long long>(static_cast<int>(d.kind)));
    rep.add("a_size", static_cast<long long>(d.A.n));
    rep.add("a_unit", static_cast<long long>(d.A.unit));
    rep.add("a_zero", static_cast<long long>(d.zero));
    rep.add("a_mul", d.A.mul);
    rep.add("witness", d.witness);
    rep.emit(dec_format, "");
  });

  // ---- flags ---------------------------------------------------------------
  auto* cmd_flags =
      app.add_subcommand("flags", "order- and unit-shape statistics");
  std::string flags_file;
  std::string flags_format = "frl";
  cmd_flags->add_option("file", flags_file, "algebra file or '-'")->required();
  cmd_flags->add_option("--format", flags_format, "frl|json");
  cmd_flags->callback([&] {
    urlat::FinRL R = urlat::parse_frl(read_input(flags_file));
    urlat::URLFlags f = urlat::url_flags(R);
    Report rep;
    rep.add("is_unilinear", f.is_unilinear);
    rep.add("is_linear", f.is_linear);
    rep.add("top_central", f.top_central);
    rep.add("top_unital", f.top_unital);
    rep.add("rigorously_compact", f.rigorously_compact);
    rep.add("compact", f.compact);
    rep.add("height", static_cast<long long>(f.height));
    rep.add("width", static_cast<long long>(f.width));
    rep.emit(flags_format, "");
  });

  // ---- discriminator --------------------------------------------------------
  auto* cmd_disc = app.add_subcommand(
      "discriminator", "test the ternary discriminator term");
  std::string disc_file;
  std::string disc_format = "frl";
  cmd_disc->add_option("file", disc_file, "algebra file or '-'")->required();
  cmd_disc->add_option("--format", disc_format, "frl|json");
  cmd_disc->callback([&] {
    urlat::FinRL R = urlat::parse_frl(read_input(disc_file));
    urlat::DiscriminatorReport d = urlat::check_discriminator(R);
    Report rep;
    rep.add("discriminator", d.is_discriminator);
    if (!d.is_discriminator) {
      rep.add("witness", std::vector<int>(d.witness.begin(), d.witness.end()));
      rep.add("value", static_cast<long long>(d.value));
    }
    rep.emit(disc_format, "");
  });

  // ---- quotient -------------------------------------------------------------
  auto* cmd_quot = app.add_subcommand(
      "quotient", "comparability classes and the quotient monoid");
  std::string quot_file;
  std::string quot_format = "frl";
  cmd_quot->add_option("file", quot_file, "algebra file or '-'")->required();
  cmd_quot->add_option("--format", quot_format, "frl|json");
  cmd_quot->callback([&] {
    urlat::FinRL R = urlat::parse_frl(read_input(quot_file));
    urlat::ComparabilityQuotient q = urlat::comparability_quotient(R);
    Report rep;
    rep.add("classes", static_cast<long long>(q.classes.size()));
    for (std::size_t i = 0; i < q.classes.size(); ++i) {
      rep.add("class_" + std::to_string(i), q.classes[i]);
    }
    rep.add("unit_class", static_cast<long long>(q.unit_class));
    rep.add("k_mul", q.K.mul);
    rep.add("congruence", q.congruence);
    rep.add("cancellative", q.cancellative);
    rep.add("admissible", q.admissible);
    rep.add("k_cancellative", q.k_cancellative);
    rep.emit(quot_format, "");
  });

  // ---- reconstruct ------------------------------------------------------------
  auto* cmd_rec = app.add_subcommand(
      "reconstruct", "recover twisting data from a compact algebra");
  std::string rec_file;
  std::string rec_format = "frl";
  cmd_rec->add_option("file", rec_file, "algebra file or '-'")->required();
  cmd_rec->add_option("--format", rec_format, "frl|json");
  cmd_rec->callback([&] {
    urlat::FinRL R = urlat::parse_frl(read_input(rec_file));
    urlat::Reconstruction r = urlat::reconstruct_cocycle(R);
    Report rep;
    rep.add("k_size", static_cast<long long>(r.data.K.n));
    rep.add("k_unit", static_cast<long long>(r.data.K.unit));
    rep.add("k_mul", r.data.K.mul);
    rep.add("chain_size", static_cast<long long>(r.data.A.n));
    for (std::size_t k = 0; k < r.data.phi.size(); ++k) {
      rep.add("phi_" + std::to_string(k), r.data.phi[k]);
    }
    rep.add("f", r.data.f);
    rep.add("iso", r.iso);
    rep.emit(rec_format, "");
  });

  // ---- enumerate -----------------------------------------------------------
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "all algebra classes on the bounded antichain lattice");
  int en_size = 0, en_jobs = 1;
  long long en_cap = -1;
  bool en_count_only = false;
  int en_index = -1;
  std::string en_format = "frl";
  std::string en_out;
  cmd_enum->add_option("--x-size", en_size, "antichain size")->required();
  cmd_enum->add_flag("--count-only", en_count_only, "print only the count");
  cmd_enum->add_option("--index", en_index, "emit a single class");
  cmd_enum->add_option("--jobs", en_jobs, "worker threads");
  cmd_enum->add_option("--cap", en_cap, "fail above this many classes");
  cmd_enum->add_option("--format", en_format, "frl|json");
  cmd_enum->add_option("--out", en_out, "output file (default stdout)");
  cmd_enum->callback([&] {
    std::optional<long long> cap;
    if (en_cap >= 0) cap = en_cap;
    auto all = urlat::enumerate_mx(en_size, cap, en_jobs);
    if (en_count_only) {
      write_output(en_out, std::to_string(all.size()) + "\n");
      return;
    }
    if (en_index >= 0) {
      if (en_index >= static_cast<int>(all.size())) {
        throw urlat::Error(urlat::Err::SemanticError,
                           "class index out of range", {en_index});
      }
      emit_algebra(all[en_index], en_format, en_out);
      return;
    }
    std::ostringstream os;
    for (const auto& R : all) {
      os << (en_format == "json" ? urlat::render_frl_json(R)
                                 : urlat::render_frl(R));
    }
    write_output(en_out, os.str());
  });

  // ---- fep ------------------------------------------------------------------
  auto* cmd_fep = app.add_subcommand(
      "fep", "frame, Galois algebra, and embedding over a subset");
  std::string fep_file, fep_subset;
  std::string fep_format = "frl";
  bool fep_emit = false;
  cmd_fep->add_option("--algebra", fep_file, "algebra file or '-'")
      ->required();
  cmd_fep->add_option("--subset", fep_subset, "comma-separated indices")
      ->required();
  cmd_fep->add_option("--format", fep_format, "frl|json");
  cmd_fep->add_flag("--emit-algebra", fep_emit,
                    "emit the Galois algebra instead of the report");
  cmd_fep->callback([&] {
    urlat::FinRL A = urlat::parse_frl(read_input(fep_file));
    urlat::Frame fr = urlat::build_frame(A, parse_int_list(fep_subset));
    urlat::GaloisAlgebra g = urlat::build_galois_algebra(fr);
    if (fep_emit) {
      emit_algebra(g.algebra, fep_format, "");
      return;
    }
    urlat::EmbeddingReport e = urlat::check_fep_embedding(g);
    urlat::URLFlags f = urlat::url_flags(g.algebra);
    Report rep;
    rep.add("w_size", static_cast<long long>(fr.W.size()));
    rep.add("w", fr.W);
    rep.add("closed_count", static_cast<long long>(g.closed.size()));
    rep.add("unilinear", f.is_unilinear);
    rep.add("injective", e.injective);
    rep.add("unit_ok", e.unit_ok);
    rep.add("bot_ok", e.bot_ok);
    rep.add("top_ok", e.top_ok);
    rep.add("checked_meet", static_cast<long long>(e.checked[0]));
    rep.add("checked_join", static_cast<long long>(e.checked[1]));
    rep.add("checked_mul", static_cast<long long>(e.checked[2]));
    rep.add("checked_ldiv", static_cast<long long>(e.checked[3]));
    rep.add("checked_rdiv", static_cast<long long>(e.checked[4]));
    rep.add("ok", e.ok);
    rep.add("image", e.ok ? g.image : std::vector<int>{});
    rep.emit(fep_format, "");
  });

  // ---- variety ---------------------------------------------------------------
  auto* cmd_var = app.add_subcommand(
      "variety", "group-signature and downset queries");
  cmd_var->require_subcommand(1);

  auto* v_exp = cmd_var->add_subcommand("exp", "largest torsion exponent");
  std::string v_exp_sig;
  v_exp->add_option("sig", v_exp_sig, "signature")->required();
  v_exp->callback([&] {
    std::cout << urlat::exp_of(urlat::parse_sig(v_exp_sig)) << "\n";
  });

  auto* v_primes =
      cmd_var->add_subcommand("primes", "torsion prime indices");
  std::string v_primes_sig;
  v_primes->add_option("sig", v_primes_sig, "signature")->required();
  v_primes->callback([&] {
    auto ps = urlat::primes_of(urlat::parse_sig(v_primes_sig));
    std::cout << join_ints(ps, " ") << "\n";
  });

  auto* v_leq = cmd_var->add_subcommand("leq", "embeddability order");
  std::string v_leq_a, v_leq_b;
  v_leq->add_option("a", v_leq_a, "signature")->required();
  v_leq->add_option("b", v_leq_b, "signature")->required();
  v_leq->callback([&] {
    bool le = urlat::sig_leq(urlat::parse_sig(v_leq_a),
                             urlat::parse_sig(v_leq_b));
    std::cout << (le ? "true" : "false") << "\n";
  });

  auto* v_join = cmd_var->add_subcommand("join", "least upper bound");
  std::string v_join_a, v_join_b;
  v_join->add_option("a", v_join_a, "signature")->required();
  v_join->add_option("b", v_join_b, "signature")->required();
  v_join->callback([&] {
    std::cout << urlat::render_sig(urlat::sig_join(
                     urlat::parse_sig(v_join_a), urlat::parse_sig(v_join_b)))
              << "\n";
  });

  auto* v_z = cmd_var->add_subcommand("zclosed", "downset closure check");
  std::string v_z_d;
  std::string v_z_format = "frl";
  v_z->add_option("downset", v_z_d, "downset description")->required();
  v_z->add_option("--format", v_z_format, "frl|json");
  v_z->callback([&] {
    urlat::ZClosureReport r = urlat::is_z_closed(urlat::parse_downset(v_z_d));
    Report rep;
    rep.add("closed", r.closed);
    if (!r.closed) {
      rep.add("violating", urlat::render_sig(*r.violating));
      rep.add("missing", urlat::render_sig(*r.missing));
    }
    rep.emit(v_z_format, "");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const urlat::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == urlat::Err::SyntaxError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
