#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "skyline/correspondences.hpp"
#include "skyline/crystal.hpp"
#include "skyline/demazure.hpp"
#include "skyline/json_io.hpp"
#include "skyline/kernel.hpp"
#include "skyline/skyline.hpp"
#include "skyline/tableaux.hpp"

namespace skyline::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("cannot parse ") + what + " as JSON: " + e.what());
  }
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

// Rows bottom-up, separated by ';' or '/', entries by ',' or spaces.
Tableau parse_rows(const std::string& text, int n) {
  std::vector<std::vector<int>> rows;
  std::string cur;
  auto flush = [&] {
    WeakComposition row = WeakComposition::parse(cur);
    if (!row.empty()) rows.push_back(row.entries());
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ';' || ch == '/') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  if (n <= 0) {
    for (const auto& row : rows) {
      for (int v : row) n = std::max(n, v);
    }
  }
  return Tableau(std::move(rows), n);
}

Ssaf parse_ssaf(const std::string& text) { return parse_json(text, "SSAF").get<Ssaf>(); }

WeakComposition parse_composition(const std::string& text) { return WeakComposition::parse(text); }

void print_tableau(std::ostream& out, const char* name, const Tableau& t) {
  out << name << ": " << t.to_string() << '\n';
  out << name << " column word: " << join(t.column_word(), "") << '\n';
}

void print_ssaf(std::ostream& out, const char* name, const Ssaf& f) {
  out << name << ": " << f.to_string() << '\n';
  out << name << " shape: " << f.shape().to_string() << '\n';
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-skyline fillings, Demazure characters and kernel expansions", "skyline"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every verb");

  bool as_json = false;
  auto add_json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Machine readable output"); };

  int k_letter = 0;
  std::string ssaf_text, f_text, g_text, tableau_text, rows_text, biword_text, alpha_text, shape_text;
  std::string format = "text";
  int n = 0;
  int m_param = 0;
  int k_param = 0;
  int degree = 0;
  int max_len = 0;
  int jobs = 1;
  bool atom_only = false;
  std::string json_path;

  auto* insert_cmd = app.add_subcommand("insert", "Insert a letter into an SSAF");
  insert_cmd->add_option("--k", k_letter, "Letter to insert")->required();
  insert_cmd->add_option("--ssaf", ssaf_text, "SSAF as JSON {\"n\":..,\"columns\":[..]}")->required();
  add_json_flag(insert_cmd);

  auto* psi_cmd = app.add_subcommand("psi", "Map an SSYT to its SSAF");
  auto* psi_tab = psi_cmd->add_option("--tableau", tableau_text, "Tableau as JSON");
  auto* psi_rows = psi_cmd->add_option("--rows", rows_text, "Rows bottom-up, e.g. \"1,1,2;2,3\"");
  psi_tab->excludes(psi_rows);
  psi_cmd->add_option("--n", n, "Alphabet size (with --rows)");
  add_json_flag(psi_cmd);

  auto* psi_inv_cmd = app.add_subcommand("psi-inv", "Recover the SSYT of an SSAF");
  psi_inv_cmd->add_option("--ssaf", ssaf_text, "SSAF as JSON")->required();
  add_json_flag(psi_inv_cmd);

  auto* phi_cmd = app.add_subcommand("phi", "Map a biword to a pair of SSAFs");
  phi_cmd->add_option("--biword", biword_text, "Biword \"i1 i2 .. / j1 j2 ..\"")->required();
  phi_cmd->add_option("--n", n, "Basement size")->required()->check(CLI::PositiveNumber);
  add_json_flag(phi_cmd);

  auto* phi_inv_cmd = app.add_subcommand("phi-inv", "Recover the biword of an SSAF pair");
  phi_inv_cmd->add_option("--f", f_text, "F as JSON")->required();
  phi_inv_cmd->add_option("--g", g_text, "G as JSON")->required();
  add_json_flag(phi_inv_cmd);

  auto* rsk_cmd = app.add_subcommand("rsk", "Row insertion RSK of a biword");
  rsk_cmd->add_option("--biword", biword_text, "Biword \"i1 i2 .. / j1 j2 ..\"")->required();
  rsk_cmd->add_option("--n", n, "Alphabet size")->required()->check(CLI::PositiveNumber);
  add_json_flag(rsk_cmd);

  auto* key_cmd = app.add_subcommand("key", "Key tableau of a weak composition");
  key_cmd->add_option("--alpha", alpha_text, "Weak composition, comma separated")->required();
  add_json_flag(key_cmd);

  auto* keypoly_cmd = app.add_subcommand("keypoly", "Key polynomial");
  keypoly_cmd->add_option("--alpha", alpha_text, "Weak composition, comma separated")->required();
  add_json_flag(keypoly_cmd);

  auto* atom_cmd = app.add_subcommand("atom", "Demazure atom");
  atom_cmd->add_option("--alpha", alpha_text, "Weak composition, comma separated")->required();
  add_json_flag(atom_cmd);

  auto* crystal_cmd = app.add_subcommand("crystal", "Crystal graph or Demazure crystal");
  auto* crystal_shape = crystal_cmd->add_option("--shape", shape_text, "Partition for the full crystal graph");
  auto* crystal_alpha = crystal_cmd->add_option("--alpha", alpha_text, "List the Demazure crystal of alpha");
  crystal_shape->excludes(crystal_alpha);
  crystal_cmd->add_option("--n", n, "Alphabet size (default: length of --shape)");
  crystal_cmd->add_option("--format", format, "text, dot or json")
      ->check(CLI::IsMember({"text", "dot", "json"}));
  crystal_cmd->add_flag("--atom", atom_only, "With --alpha, list the atom set instead");

  auto* vmain_cmd = app.add_subcommand("verify-main", "Exhaustive check of the staircase criterion for phi");
  vmain_cmd->add_option("--n", n, "Alphabet size")->required()->check(CLI::PositiveNumber);
  vmain_cmd->add_option("--max-len", max_len, "Largest number of biletters")->required()->check(CLI::NonNegativeNumber);
  vmain_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_json_flag(vmain_cmd);

  auto* vkernel_cmd = app.add_subcommand("verify-kernel", "Compare both sides of the kernel expansion");
  vkernel_cmd->add_option("--n", n, "n")->required()->check(CLI::PositiveNumber);
  vkernel_cmd->add_option("--m", m_param, "m")->required()->check(CLI::PositiveNumber);
  vkernel_cmd->add_option("--k", k_param, "k")->required()->check(CLI::PositiveNumber);
  vkernel_cmd->add_option("--deg", degree, "Truncation degree")->required()->check(CLI::NonNegativeNumber);
  vkernel_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  vkernel_cmd->add_option("--json", json_path, "Write the JSON report to this file ('-' for stdout)")
      ->expected(0, 1)
      ->default_str("-");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("skyline");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (insert_cmd->parsed()) {
      Ssaf f = parse_ssaf(ssaf_text);
      InsertionResult r = insert(k_letter, f);
      if (as_json) {
        write_json(out, {{"filling", r.filling},
                         {"shape", r.filling.shape()},
                         {"height", r.height},
                         {"column", r.column},
                         {"chain", r.chain}});
      } else {
        print_ssaf(out, "filling", r.filling);
        out << "height: " << r.height << "\ncolumn: " << r.column << "\nchain: " << join(r.chain, " -> ")
            << '\n';
      }
    } else if (psi_cmd->parsed()) {
      Tableau t;
      if (!tableau_text.empty()) {
        t = parse_json(tableau_text, "tableau").get<Tableau>();
      } else if (!rows_text.empty()) {
        t = parse_rows(rows_text, n);
      } else {
        throw UsageError("psi needs --tableau or --rows");
      }
      Ssaf f = psi(t);
      if (as_json) {
        write_json(out, {{"filling", f}, {"shape", f.shape()}, {"right_key", right_key(t)}});
      } else {
        print_ssaf(out, "filling", f);
        out << "right key: " << right_key(t).to_string() << '\n';
      }
    } else if (psi_inv_cmd->parsed()) {
      Tableau t = psi_inverse(parse_ssaf(ssaf_text));
      if (as_json) {
        write_json(out, {{"tableau", t}});
      } else {
        print_tableau(out, "tableau", t);
      }
    } else if (phi_cmd->parsed()) {
      Biword w = Biword::parse(biword_text);
      SsafPair fg = phi(w, n);
      TheoremSides sides = main_theorem_predicate(w, n);
      if (as_json) {
        write_json(out, {{"biword", w},
                         {"F", fg.f},
                         {"G", fg.g},
                         {"shape_F", fg.f.shape()},
                         {"shape_G", fg.g.shape()},
                         {"inside_staircase", sides.lhs},
                         {"key_G_leq_key_rev_F", sides.rhs}});
      } else {
        print_ssaf(out, "F", fg.f);
        print_ssaf(out, "G", fg.g);
        out << "inside staircase: " << (sides.lhs ? "yes" : "no") << '\n';
        out << "key(sh G) <= key(rev sh F): " << (sides.rhs ? "yes" : "no") << '\n';
      }
    } else if (phi_inv_cmd->parsed()) {
      Biword w = phi_inverse(parse_ssaf(f_text), parse_ssaf(g_text));
      if (as_json) {
        write_json(out, {{"biword", w}});
      } else {
        out << "biword: " << w.to_string() << '\n';
      }
    } else if (rsk_cmd->parsed()) {
      TableauPair pq = rsk(Biword::parse(biword_text), n);
      if (as_json) {
        write_json(out, {{"P", pq.p}, {"Q", pq.q}});
      } else {
        print_tableau(out, "P", pq.p);
        print_tableau(out, "Q", pq.q);
      }
    } else if (key_cmd->parsed()) {
      Tableau t = key_tableau(parse_composition(alpha_text));
      if (as_json) {
        write_json(out, {{"key", t}});
      } else {
        print_tableau(out, "key", t);
      }
    } else if (keypoly_cmd->parsed() || atom_cmd->parsed()) {
      WeakComposition alpha = parse_composition(alpha_text);
      Polynomial p = keypoly_cmd->parsed() ? key_polynomial(alpha) : atom(alpha);
      if (as_json) {
        write_json(out, {{"alpha", alpha}, {"polynomial", p}});
      } else {
        out << p.to_string() << '\n';
      }
    } else if (crystal_cmd->parsed()) {
      if (!alpha_text.empty()) {
        WeakComposition alpha = parse_composition(alpha_text);
        std::set<Tableau> members = atom_only ? atom_set(alpha) : demazure_crystal(alpha).members;
        if (format == "dot") throw UsageError("--format dot needs --shape");
        if (format == "json") {
          write_json(out, {{"alpha", alpha},
                           {"atom", atom_only},
                           {"members", std::vector<Tableau>(members.begin(), members.end())},
                           {"weight", weight_polynomial(members, static_cast<int>(alpha.size()))}});
        } else {
          for (const Tableau& t : members) out << word_label(t) << '\n';
        }
      } else {
        if (shape_text.empty()) throw UsageError("crystal needs --shape or --alpha");
        Partition lambda(parse_composition(shape_text));
        int rank = n > 0 ? n : static_cast<int>(lambda.size());
        CrystalGraph g = crystal_graph(lambda, rank);
        if (format == "text") {
          out << "vertices: " << g.size() << '\n';
          for (const CrystalEdge& e : g.edges()) {
            out << word_label(g.vertices()[e.source]) << " -" << e.color << "-> "
                << word_label(g.vertices()[e.target]) << '\n';
          }
        } else {
          out << export_graph(g, format);
        }
      }
    } else if (vmain_cmd->parsed()) {
      MainTheoremReport r = verify_main_theorem(n, max_len, jobs);
      if (as_json) {
        write_json(out, report_to_json(r));
      } else {
        out << "checked " << r.checked << " biwords over [" << n << "]x[" << n << "] with at most "
            << max_len << " letters\n";
        out << "inside staircase: " << r.inside_staircase << '\n';
        out << "failures: " << r.failures << '\n';
        if (r.first_failure) out << "first failure: " << r.first_failure->to_string() << '\n';
      }
      return r.ok() ? kExitOk : kExitVerificationFailed;
    } else if (vkernel_cmd->parsed()) {
      KernelInstance inst = make_kernel_instance(n, m_param, k_param);
      ExpansionReport r = verify_expansion(inst, degree, jobs);
      bool want_json = vkernel_cmd->count("--json") > 0;
      if (want_json && (json_path.empty() || json_path == "-")) {
        write_json(out, report_to_json(r));
      } else {
        if (want_json) {
          std::ofstream file(json_path);
          if (!file) throw UsageError("cannot open " + json_path + " for writing");
          write_json(file, report_to_json(r));
        }
        out << inst.to_string() << " degree=" << degree << '\n';
        out << "lhs terms: " << r.lhs.num_terms() << ", rhs terms: " << r.rhs.num_terms() << '\n';
        if (r.equal) {
          out << "equal\n";
        } else {
          out << "MISMATCH at " << exponent_to_string(*r.first_mismatch) << ": lhs " << r.lhs_coefficient
              << ", rhs " << r.rhs_coefficient << '\n';
        }
      }
      return r.equal ? kExitOk : kExitVerificationFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace skyline::cli
