// Command-line front end: all verbs parse plain-text inputs, run one
// computation, and print a deterministic report. Exit status 0 means the
// computation completed (whatever the boolean outcome); 2 means bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lgt/io.hpp"
#include "lgt/semantics.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lgt::error("cannot open file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::size_t> tuple_from_option(const std::string& text,
                                           const lgt::FiniteAlgebra& h) {
  return lgt::parse_tuple(text, h);
}

lgt::Sort sort_from_option(const std::string& text) {
  std::vector<std::string> vars;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) vars.push_back(tok);
  return lgt::Sort(std::move(vars));
}

void print_matrix_block(const std::string& label, const lgt::IntMatrix& m) {
  std::cout << label << ":\n" << lgt::matrix_to_text(m);
}

const char* extend_reason(lgt::ExtendStatus s) {
  switch (s) {
    case lgt::ExtendStatus::ok: return "ok";
    case lgt::ExtendStatus::no_forward_endo: return "NoForwardEndo";
    case lgt::ExtendStatus::no_backward_endo: return "NoBackwardEndo";
  }
  return "unknown";
}

const char* sg_reason(lgt::SgExtendStatus s) {
  switch (s) {
    case lgt::SgExtendStatus::ok: return "ok";
    case lgt::SgExtendStatus::length_mismatch: return "LengthMismatch";
    case lgt::SgExtendStatus::conflicting_alignment: return "ConflictingAlignment";
    case lgt::SgExtendStatus::not_injective: return "NotInjective";
  }
  return "unknown";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for multi-sorted formula semantics over finite algebras, "
               "first-order translation, and constructive automorphism extension"};
  app.require_subcommand(1);

  std::string algebra_file, algebra_file2, formula_file, point_file, point_file2;
  std::string matrix_file, a_file, b_file, pool_file, tuple1, tuple2, sort_text;
  std::string kind, q_text;
  std::size_t max_length = 0, max_depth = 0, rounds = 0, dim = 0, alphabet = 0;
  long long q0_val = 0;

  auto* eval = app.add_subcommand("eval", "evaluate a formula at a point");
  eval->add_option("--algebra", algebra_file)->required();
  eval->add_option("--formula", formula_file)->required();
  eval->add_option("--point", point_file)->required();

  auto* lker = app.add_subcommand(
      "lker-eq", "compare the logical kernels of two points on all formulas "
                 "within the bounds");
  lker->add_option("--algebra1", algebra_file)->required();
  lker->add_option("--point1", point_file)->required();
  lker->add_option("--algebra2", algebra_file2)->required();
  lker->add_option("--point2", point_file2)->required();
  lker->add_option("--max-length", max_length)->required();
  lker->add_option("--max-term-depth", max_depth)->required();
  lker->add_option("--pool", pool_file);

  auto* type_eq = app.add_subcommand(
      "type-eq", "decide whether two tuples lie in one automorphism orbit");
  type_eq->add_option("--algebra", algebra_file)->required();
  type_eq->add_option("--tuple1", tuple1)->required();
  type_eq->add_option("--tuple2", tuple2)->required();

  auto* ef = app.add_subcommand(
      "ef", "Ehrenfeucht-Fraisse equivalence of two pebbled tuples");
  ef->add_option("--algebra1", algebra_file)->required();
  ef->add_option("--tuple1", tuple1)->required();
  ef->add_option("--algebra2", algebra_file2)->required();
  ef->add_option("--tuple2", tuple2)->required();
  ef->add_option("--rounds", rounds)->required();

  auto* translate = app.add_subcommand(
      "translate", "translate a multi-sorted formula to first-order form");
  translate->add_option("--formula", formula_file)->required();

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", matrix_file)->required();

  auto* abext = app.add_subcommand(
      "abelian-extend",
      "extend a correspondence of integer tuples to an automorphism of Z^n");
  abext->add_option("--dim", dim)->required();
  abext->add_option("--a", a_file)->required();
  abext->add_option("--b", b_file)->required();

  auto* abf = app.add_subcommand("abelian-formula",
                                 "evaluate the u/v formula families on a tuple");
  abf->add_option("--kind", kind)->required()->check(CLI::IsMember({"u", "v"}));
  abf->add_option("--q", q_text)->required();
  abf->add_option("--q0", q0_val);
  abf->add_option("--g", a_file)->required();

  auto* sgext = app.add_subcommand(
      "semigroup-extend", "extend a word correspondence to an alphabet bijection");
  sgext->add_option("--alphabet", alphabet)->required();
  sgext->add_option("--a", a_file)->required();
  sgext->add_option("--b", b_file)->required();

  app.add_subcommand("f2-verify",
                     "replay the rank-2 free group counterexample certificate");

  auto* enumerate = app.add_subcommand(
      "enumerate", "list every formula of a sort within the bounds");
  enumerate->add_option("--algebra", algebra_file)->required();
  enumerate->add_option("--sort", sort_text)->required();
  enumerate->add_option("--max-length", max_length)->required();
  enumerate->add_option("--max-term-depth", max_depth)->required();
  enumerate->add_option("--pool", pool_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      lgt::FiniteAlgebra h = lgt::parse_algebra(read_file(algebra_file));
      lgt::MSFormulaPtr f = lgt::parse_formula(read_file(formula_file));
      lgt::Point p = lgt::parse_point(read_file(point_file), h);
      std::cout << (lgt::satisfies(h, *f, p) ? "true" : "false") << "\n";
    } else if (lker->parsed()) {
      lgt::FiniteAlgebra h1 = lgt::parse_algebra(read_file(algebra_file));
      lgt::FiniteAlgebra h2 = lgt::parse_algebra(read_file(algebra_file2));
      lgt::Point p1 = lgt::parse_point(read_file(point_file), h1);
      lgt::Point p2 = lgt::parse_point(read_file(point_file2), h2);
      std::vector<lgt::Substitution> pool;
      if (!pool_file.empty()) pool = lgt::parse_subst_pool(read_file(pool_file));
      auto r = lgt::bounded_lker_eq(h1, p1, h2, p2, max_length, max_depth, pool);
      std::cout << (r.equal ? "true" : "false") << "\n";
      if (!r.equal) std::cout << "separator: " << lgt::formula_to_sexpr(*r.separator) << "\n";
    } else if (type_eq->parsed()) {
      lgt::FiniteAlgebra h = lgt::parse_algebra(read_file(algebra_file));
      auto t1 = tuple_from_option(tuple1, h);
      auto t2 = tuple_from_option(tuple2, h);
      lgt::OrbitResult r = lgt::orbit_equivalent(h, t1, t2);
      std::cout << (r.equivalent ? "true" : "false") << "\n";
      if (r.witness) {
        std::cout << "automorphism:";
        for (std::size_t v : *r.witness) std::cout << " " << v;
        std::cout << "\n";
      }
    } else if (ef->parsed()) {
      lgt::FiniteAlgebra h1 = lgt::parse_algebra(read_file(algebra_file));
      lgt::FiniteAlgebra h2 = lgt::parse_algebra(read_file(algebra_file2));
      auto t1 = tuple_from_option(tuple1, h1);
      auto t2 = tuple_from_option(tuple2, h2);
      std::cout << (lgt::ef_equivalent(h1, t1, h2, t2, rounds) ? "true" : "false")
                << "\n";
    } else if (translate->parsed()) {
      lgt::MSFormulaPtr f = lgt::parse_formula(read_file(formula_file));
      std::cout << lgt::fo_to_sexpr(*lgt::translate(*f)) << "\n";
    } else if (snf->parsed()) {
      lgt::IntMatrix m = lgt::parse_matrix(read_file(matrix_file));
      lgt::SmithForm s = lgt::smith_normal_form(m);
      std::cout << "invariants:";
      for (const auto& p : s.invariants) std::cout << " " << p.to_string();
      std::cout << "\n";
      print_matrix_block("D", s.d);
      print_matrix_block("U", s.u);
      print_matrix_block("V", s.v);
    } else if (abext->parsed()) {
      auto a = lgt::parse_vector_rows(read_file(a_file));
      auto b = lgt::parse_vector_rows(read_file(b_file));
      lgt::ExtendResult r = lgt::abelian_extend(dim, a, b);
      std::cout << "extended: " << (r.ok() ? "true" : "false") << "\n";
      if (!r.ok()) {
        std::cout << "reason: " << extend_reason(r.status) << "\n";
      } else {
        const auto& c = *r.certificate;
        print_matrix_block("phi", c.phi);
        std::cout << "det: " << lgt::determinant(c.phi).to_string() << "\n";
        std::cout << "invariants-a:";
        for (const auto& p : c.basis_a.invariants) std::cout << " " << p.to_string();
        std::cout << "\n";
        print_matrix_block("basis-a", c.basis_a.ambient);
        std::cout << "invariants-b:";
        for (const auto& p : c.basis_b.invariants) std::cout << " " << p.to_string();
        std::cout << "\n";
        print_matrix_block("basis-b", c.basis_b.ambient);
        print_matrix_block("sigma", c.sigma);
        print_matrix_block("tau", c.tau);
      }
    } else if (abf->parsed()) {
      auto g = lgt::parse_vector_rows(read_file(a_file));
      std::vector<lgt::BigInt> q;
      {
        std::istringstream in(q_text);
        std::string tok;
        while (in >> tok) q.push_back(lgt::BigInt::from_string(tok));
      }
      bool result = kind == "u"
                        ? lgt::eval_u_formula(q, g)
                        : lgt::eval_v_formula(q, lgt::BigInt(q0_val), g);
      std::cout << (result ? "true" : "false") << "\n";
    } else if (sgext->parsed()) {
      auto a = lgt::parse_sg_words(read_file(a_file), alphabet);
      auto b = lgt::parse_sg_words(read_file(b_file), alphabet);
      lgt::SgExtendResult r = lgt::semigroup_extend(alphabet, a, b);
      std::cout << "extended: " << (r.ok() ? "true" : "false") << "\n";
      if (!r.ok()) {
        std::cout << "reason: " << sg_reason(r.status) << "\n";
        if (!r.detail.empty()) std::cout << "detail: " << r.detail << "\n";
      } else {
        for (std::size_t l = 0; l < r.bijection.size(); ++l)
          std::cout << "x" << l + 1 << " -> x" << r.bijection[l] + 1 << "\n";
      }
    } else if (app.get_subcommand("f2-verify")->parsed()) {
      lgt::F2Report rep = lgt::verify_f2_counterexample();
      std::cout << rep.to_text();
    } else if (enumerate->parsed()) {
      lgt::FiniteAlgebra h = lgt::parse_algebra(read_file(algebra_file));
      lgt::Sort sort = sort_from_option(sort_text);
      std::vector<lgt::Substitution> pool;
      if (!pool_file.empty()) pool = lgt::parse_subst_pool(read_file(pool_file));
      lgt::FormulaEnumerator en(h.signature(), sort, max_length, max_depth, pool);
      while (lgt::MSFormulaPtr f = en.next())
        std::cout << lgt::formula_to_sexpr(*f) << "\n";
    }
  } catch (const lgt::internal_check_failed& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const lgt::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
