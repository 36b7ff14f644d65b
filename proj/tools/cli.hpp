#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gradedga/gradedga.hpp"
#include "gradedga/json_io.hpp"
#include "gradedga/random.hpp"

namespace gradedga::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kDemoFailed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string algebra;
  std::string in = "-";
  std::string out = "-";
  std::string format = "json";
  double tol = Tolerance{}.eps_rel;
  std::string order;
  bool basis = false;
  bool blocks = false;
  double t = 1.0;
  std::string demo;
  std::uint64_t seed = 1;
};

inline AlgebraPtr parse_algebra(const std::string& spec) {
  std::vector<int> v;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--algebra expects p,q[,r]");
    }
  }
  if (v.size() < 2 || v.size() > 3) throw UsageError("--algebra expects p,q[,r]");
  return make_algebra(v[0], v[1], v.size() == 3 ? v[2] : 0);
}

inline std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  return "(" + format_double(c.real()) + (c.imag() < 0 ? "" : "+") + format_double(c.imag()) + "i)";
}

inline std::string format_text(const Multivector& x) {
  std::string s;
  for (std::size_t m = 0; m < x.size(); ++m) {
    const Complex c = x[static_cast<BladeMask>(m)];
    if (c == Complex{}) continue;
    if (!s.empty()) s += " + ";
    s += format_complex(c);
    if (m != 0) s += " " + x.algebra().blade_name(static_cast<BladeMask>(m));
  }
  return s.empty() ? "0" : s;
}

template <class Matrix>
Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<typename Matrix::Scalar, Complex>) {
        row.push_back(complex_to_json(m(i, j)));
      } else {
        row.push_back(m(i, j));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json monomial_to_json(const MonomialMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Matrix>
std::string matrix_to_csv(const Matrix& m) {
  std::string s;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      if constexpr (std::is_same_v<typename Matrix::Scalar, Complex>) {
        const Complex c = m(i, j);
        s += format_double(c.real());
        if (c.imag() != 0.0) s += (c.imag() < 0 ? "" : "+") + format_double(c.imag()) + "j";
      } else {
        s += format_double(static_cast<double>(m(i, j)));
      }
    }
    s += '\n';
  }
  return s;
}

inline Json order_to_json(const BladeOrder& order) {
  Json names = Json::array();
  for (const auto& e : order) names.push_back(e.name);
  return names;
}

/// One residual check of a demo; informational checks do not decide the exit code.
struct Check {
  std::string name;
  double residual;
  double tolerance;
  bool informational = false;
  bool pass() const { return residual <= tolerance; }
};

struct Report {
  std::string name;
  std::vector<Check> checks;
  Json data = Json::object();

  void add(std::string check, double residual, double tolerance) {
    checks.push_back({std::move(check), residual, tolerance, false});
  }
  void note(std::string check, double residual, double tolerance) {
    checks.push_back({std::move(check), residual, tolerance, true});
  }
  bool pass() const {
    for (const auto& c : checks) {
      if (!c.informational && !c.pass()) return false;
    }
    return true;
  }
  Json to_json() const {
    Json list = Json::array();
    for (const auto& c : checks) {
      Json j{{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass()}};
      if (c.informational) j["informational"] = true;
      list.push_back(std::move(j));
    }
    return Json{{"demo", name}, {"pass", pass()}, {"checks", std::move(list)}, {"data", data}};
  }
};

namespace demos {

inline Multivector blade(const AlgebraPtr& a, const char* name, Complex v = 1.0) {
  return Multivector::named(a, name, v);
}

inline Report riesz(const Tolerance& tol) {
  Report r{"riesz", {}, Json::object()};
  const auto A = make_algebra(2, 2);
  const Multivector B = (blade(A, "e12") + blade(A, "e14") - blade(A, "e23") - blade(A, "e34")) * 0.5;
  const Decomposition d = split(B, tol);
  const Complex i(0.0, 1.0);
  const Multivector b1 = (blade(A, "e12", 1.0 - i) + blade(A, "e14", 1.0 + i) + blade(A, "e23", -1.0 - i) +
                          blade(A, "e34", -1.0 + i)) * 0.25;
  const Multivector b2 = (blade(A, "e12", 1.0 + i) + blade(A, "e14", 1.0 - i) + blade(A, "e23", -1.0 + i) +
                          blade(A, "e34", -1.0 - i)) * 0.25;
  if (d.blades.size() != 2) {
    r.add("blade count is 2", 1.0, 0.0);
    return r;
  }
  r.add("lambda_1 = i/2", std::abs(d.lambdas[0] - 0.5 * i), 1e-12);
  r.add("lambda_2 = -i/2", std::abs(d.lambdas[1] + 0.5 * i), 1e-12);
  r.add("b_1 matches", max_abs_diff(d.blades[0], b1), 1e-12);
  r.add("b_2 matches", max_abs_diff(d.blades[1], b2), 1e-12);
  r.add("b_1 + b_2 = B", max_abs_diff(d.sum(), B), 1e-12);
  r.add("b_1 x b_2 = 0", commutator(d.blades[0], d.blades[1]).max_abs(), 1e-12);
  for (std::size_t k = 0; k < 2; ++k) {
    const Multivector sq = d.blades[k] * d.blades[k];
    r.add("b_" + std::to_string(k + 1) + "^2 = lambda_" + std::to_string(k + 1),
          max_abs_diff(sq, Multivector::scalar(A, d.lambdas[k])), 1e-12);
  }
  r.data["lambdas"] = Json::array({complex_to_json(d.lambdas[0]), complex_to_json(d.lambdas[1])});
  r.data["blades"] = Json::array({gradedga::to_json(d.blades[0]), gradedga::to_json(d.blades[1])});
  return r;
}

inline Report chasles(std::uint64_t seed, const Tolerance& tol) {
  Report r{"chasles", {}, Json::object()};
  const auto A = make_algebra(3, 0, 1);
  std::mt19937_64 rng(seed);
  const Multivector B = random_bivector(A, rng);
  const Decomposition d = split(B, tol);
  if (d.blades.size() != 2) {
    r.add("blade count is 2", 1.0, 0.0);
    return r;
  }
  // The null eigenvalue belongs to the translation along the screw axis.
  const std::size_t z = std::abs(d.lambdas[0]) < std::abs(d.lambdas[1]) ? 0 : 1;
  const std::size_t w = 1 - z;
  const Multivector& rot = d.blades[w];
  const Multivector& trans = d.blades[z];
  const Multivector expected = divide(outer(B, B), B * 2.0, tol);
  r.add("lambda_2 = 0", std::abs(d.lambdas[z]), 1e-10);
  r.add("lambda_1 = B.B", std::abs(d.lambdas[w] - (B * B).scalar_part()), 1e-10);
  r.add("b_2 = (B^B)/(2B)", max_abs_diff(trans, expected), 1e-10);
  const Multivector R = exp_bivector(B, tol);
  r.add("exp(B) = exp(b_1)(1 + b_2)",
        max_abs_diff(R, exp_simple(SimpleBivector(rot, d.lambdas[w])) * (trans + 1.0)), 1e-10);
  r.add("exp(B) matches series", max_abs_diff(R, exp_series(B)), 1e-10);
  const Factorization f = factor_even(R, tol);
  r.add("factors reproduce the motor", max_abs_diff(f.product(), R), 1e-10);
  r.data["B"] = gradedga::to_json(B);
  r.data["b1"] = gradedga::to_json(rot);
  r.data["b2"] = gradedga::to_json(trans);
  r.data["lambda1"] = complex_to_json(d.lambdas[w]);
  r.data["lambda2"] = complex_to_json(d.lambdas[z]);
  return r;
}

// Boost generator phi * (u ^ w) / |u ^ w| for a random observer u and an
// orthogonal spacelike direction w.
template <class Rng>
Multivector random_boost_generator(const AlgebraPtr& A, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> rapidity(0.1, 1.5);
  Multivector u(A);
  u[1] = 0.0;
  for (int i = 1; i < 4; ++i) u[BladeMask{1} << i] = 0.5 * g(rng);
  double spatial = 0.0;
  for (int i = 1; i < 4; ++i) spatial += std::norm(u[BladeMask{1} << i]);
  u[1] = std::sqrt(1.0 + spatial);
  Multivector w = random_multivector(A, rng, 1);
  w = w - u * (inner(w, u).scalar_part() / (u * u).scalar_part());
  const Multivector plane = outer(u, w);
  const Complex sq = (plane * plane).scalar_part();
  return plane * (rapidity(rng) / std::sqrt(sq.real()));
}

inline Report wigner(std::uint64_t seed, const Tolerance& tol) {
  Report r{"wigner", {}, Json::object()};
  const auto A = make_algebra(1, 3);
  std::mt19937_64 rng(seed);
  const Multivector k1 = random_boost_generator(A, rng);
  const Multivector k2 = random_boost_generator(A, rng);
  const Multivector R = exp_bivector(k1, tol) * exp_bivector(k2, tol);
  const Factorization f = factor_even(R, tol);
  if (f.rotors.size() != 2) {
    r.add("two factors", 1.0, 0.0);
    return r;
  }
  r.add("factors reproduce R", max_abs_diff(f.product(), R), 1e-10);
  r.add("factors commute", commutator(f.rotors[0], f.rotors[1]).max_abs(), 1e-10);
  const Complex s0 = (grade_select(f.rotors[0], 2) * grade_select(f.rotors[0], 2)).scalar_part();
  const Complex s1 = (grade_select(f.rotors[1], 2) * grade_select(f.rotors[1], 2)).scalar_part();
  const bool boost_and_rotation = (s0.real() > 0) != (s1.real() > 0);
  r.add("one boost and one rotation", boost_and_rotation ? 0.0 : 1.0, 0.0);

  const SimpleBivector b1(k1, tol), b2(k2, tol);
  const Complex c1 = co(b1), c2 = co(b2);
  const Multivector s1v = si(b1), s2v = si(b2);
  r.add("<R> = co co + si . si", std::abs(R.scalar_part() - (c1 * c2 + (s1v * s2v).scalar_part())), 1e-10);
  r.add("<R>_2 = co si + si co", max_abs_diff(grade_select(R, 2), s2v * c1 + s1v * c2), 1e-10);
  r.add("<R>_4 = si ^ si", max_abs_diff(grade_select(R, 4), outer(s1v, s2v)), 1e-10);
  r.note("<R>_2 = co si + si co + si x si",
         max_abs_diff(grade_select(R, 2), s2v * c1 + s1v * c2 + commutator(s1v, s2v)), 1e-10);
  r.data["R"] = gradedga::to_json(R);
  r.data["boost"] = gradedga::to_json(s0.real() > 0 ? f.rotors[0] : f.rotors[1]);
  r.data["rotation"] = gradedga::to_json(s0.real() > 0 ? f.rotors[1] : f.rotors[0]);
  return r;
}

inline Report pauli(const Tolerance&) {
  Report r{"pauli", {}, Json::object()};
  const auto A = make_algebra(0, 2);
  const RepMatrices rep = build_rep(A, "1,e1,e2,e21");
  const double a = 1, b = 2, c = 3, d = 4;
  const Multivector x = blade(A, "1", a) + blade(A, "e1", b) + blade(A, "e2", c) + blade(A, "e21", d);
  Eigen::MatrixXd expected(4, 4);
  expected << a, -b, -c, -d, b, a, d, -c, c, -d, a, b, d, c, -b, a;
  const Eigen::MatrixXcd D = rep_matrix(x, rep);
  r.add("D(x) equals the printed matrix", (D - expected.cast<Complex>()).cwiseAbs().maxCoeff(), 0.0);
  // The printed tilde map flips grades 1 and 2, i.e. Clifford conjugation.
  Eigen::Vector4d flip(1, -1, -1, -1);
  const Multivector xt = unvec(flip.cast<Complex>().asDiagonal() * vec(x, rep), rep);
  r.add("D(tilde x) = D(x)^T", (rep_matrix(xt, rep) - D.transpose()).cwiseAbs().maxCoeff(), 0.0);
  r.note("D(reverse x) = D(x)^T", (rep_matrix(reverse(x), rep) - D.transpose()).cwiseAbs().maxCoeff(), 0.0);
  r.data["matrix"] = matrix_to_json(D.real().eval());
  return r;
}

inline Report e3_blocks(std::uint64_t seed, const Tolerance& tol) {
  Report r{"e3-blocks", {}, Json::object()};
  const auto A = make_algebra(3, 0, 1);
  std::mt19937_64 rng(seed);
  const RepMatrices rep = build_rep(A, kE3BladeOrder);
  const Multivector R = normalize(exp_bivector(random_bivector(A, rng), tol), tol);
  const ConjugationMatrix cm = conjugation_matrix(Versor(R, Parity::Even, tol), rep);
  const E3Blocks blk = gradedga::e3_blocks(cm, rep);
  const auto v = vec(R, rep);
  const auto cf = e3_closed_form(v(0).real(), v(5).real(), v(6).real(), v(7).real(), v(8).real(),
                                 v(9).real(), v(10).real(), v(15).real());
  auto diff = [](const Eigen::MatrixXcd& m, const auto& ref) {
    return (m - ref.template cast<Complex>()).cwiseAbs().maxCoeff();
  };
  r.add("block diagonal", cm.off_block_max, 1e-10);
  r.add("D1 = 1", std::abs(blk.d1(0, 0) - 1.0), 1e-10);
  r.add("D5 = 1", std::abs(blk.d5(0, 0) - 1.0), 1e-10);
  r.add("D2 = [[R, 0], [s^T, 1]]", diff(blk.d2, cf.planes), 1e-10);
  r.add("D3 = [[R, 0], [-T R, R]]", diff(blk.d3, cf.lines), 1e-10);
  r.add("D4 = [[R, t], [0, 1]]", diff(blk.d4, cf.points), 1e-10);
  Eigen::Matrix4d planes_literal = cf.planes;
  planes_literal.block<1, 3>(3, 0) = cf.s.transpose() * cf.rotation;
  Eigen::Matrix<double, 6, 6> lines_literal = cf.lines;
  lines_literal.bottomLeftCorner<3, 3>() = cf.cross * cf.rotation;
  r.note("D2 with s^T R coupling", diff(blk.d2, planes_literal), 1e-10);
  r.note("D3 with +T R coupling", diff(blk.d3, lines_literal), 1e-10);
  planes_literal.block<1, 3>(3, 0) = cf.translation.transpose() * cf.rotation;
  r.note("D2 with t^T R coupling", diff(blk.d2, planes_literal), 1e-10);
  r.data["rotor"] = gradedga::to_json(R);
  r.data["D2"] = matrix_to_json(blk.d2.real().eval());
  r.data["D3"] = matrix_to_json(blk.d3.real().eval());
  r.data["D4"] = matrix_to_json(blk.d4.real().eval());
  return r;
}

}  // namespace demos

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Graded symmetry groups in real Clifford algebras", "gradedga"};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("GRADEDGA_TOL")) {
      try {
        o.tol = std::stod(env);
      } catch (const std::exception&) {
        err_ << "GRADEDGA_TOL is not a number\n";
        return kUsage;
      }
    }

    auto common = [&o](CLI::App* sub) {
      sub->add_option("--algebra", o.algebra, "signature p,q[,r]");
      sub->add_option("--in", o.in, "input file, - for stdin");
      sub->add_option("--out", o.out, "output file, - for stdout");
      sub->add_option("--format", o.format, "json or text (csv for matrices)");
      sub->add_option("--tol", o.tol, "relative tolerance")->check(CLI::PositiveNumber);
    };
    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const char* name : {"decompose", "exp", "log", "pow", "factor", "sandwich", "matrix-rep",
                             "conj-matrix", "demo"}) {
      CLI::App* s = app.add_subcommand(name);
      common(s);
      subs.emplace_back(name, s);
    }
    auto sub = [&](const std::string& name) {
      for (auto& [n, s] : subs) {
        if (n == name) return s;
      }
      return static_cast<CLI::App*>(nullptr);
    };
    sub("pow")->add_option("--t", o.t, "exponent")->required();
    for (const char* name : {"matrix-rep", "conj-matrix"}) {
      sub(name)->add_option("--order", o.order, "comma separated signed blade names");
    }
    sub("matrix-rep")->add_flag("--basis", o.basis, "emit generator, ordering and basis matrices");
    sub("conj-matrix")->add_flag("--blocks", o.blocks, "emit the E(3) diagonal blocks");
    sub("demo")->add_option("name", o.demo, "chasles|wigner|riesz|pauli|e3-blocks")->required();
    sub("demo")->add_option("--seed", o.seed, "random seed");

    std::vector<const char*> argv{"gradedga"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << e.what() << "\n";
      return kUsage;
    }

    std::string command;
    for (auto& [n, s] : subs) {
      if (s->parsed()) command = n;
    }
    try {
      const Tolerance tol(Tolerance{}.eps_abs, o.tol);
      return dispatch(command, o, tol);
    } catch (const UsageError& e) {
      err_ << e.what() << "\n";
      return kUsage;
    } catch (const Json::exception& e) {
      err_ << "invalid JSON input: " << e.what() << "\n";
      return kUsage;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AlgebraMismatch || e.code() == ErrorCode::DimensionCap) {
        err_ << to_string(e.code()) << ": " << e.detail() << "\n";
        return kUsage;
      }
      emit(o, Json{{"error", std::string(to_string(e.code()))}, {"detail", e.detail()}}, {});
      return kDomain;
    }
  }

 private:
  std::string read_input(const Options& o) {
    if (o.in == "-") return std::string(std::istreambuf_iterator<char>(in_), {});
    std::ifstream f(o.in);
    if (!f) throw UsageError("cannot open " + o.in);
    return std::string(std::istreambuf_iterator<char>(f), {});
  }

  void write(const Options& o, const std::string& text) {
    if (o.out == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot open " + o.out);
    f << text;
  }

  void emit(const Options& o, const Json& j, const std::optional<std::string>& text) {
    if (o.format == "text" && text) {
      write(o, *text);
    } else {
      write(o, dump(j) + "\n");
    }
  }

  AlgebraPtr cli_algebra(const Options& o) { return o.algebra.empty() ? nullptr : parse_algebra(o.algebra); }

  Json input_json(const Options& o) { return Json::parse(read_input(o)); }

  Multivector input_multivector(const Options& o) {
    return multivector_from_json(input_json(o), cli_algebra(o));
  }

  void check_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
      if (o.format == f) return;
    }
    throw UsageError("unsupported --format " + o.format);
  }

  int dispatch(const std::string& cmd, const Options& o, const Tolerance& tol) {
    if (cmd == "matrix-rep") return matrix_rep(o);
    if (cmd == "conj-matrix") return conj_matrix(o, tol);
    if (cmd == "demo") return demo(o, tol);
    check_format(o, {"json", "text"});

    if (cmd == "decompose") {
      const Decomposition d = split(input_multivector(o), tol);
      Json blades = Json::array(), lambdas = Json::array();
      std::string text;
      for (std::size_t i = 0; i < d.blades.size(); ++i) {
        blades.push_back(gradedga::to_json(d.blades[i]));
        lambdas.push_back(complex_to_json(d.lambdas[i]));
        text += "lambda = " + format_complex(d.lambdas[i]) + "  b = " + format_text(d.blades[i]) + "\n";
      }
      emit(o, Json{{"lambdas", lambdas}, {"blades", blades}}, text);
    } else if (cmd == "exp") {
      const Multivector x = input_multivector(o);
      if (!x.is_grade(2, tol) && !x.is_zero(tol)) throw Error(ErrorCode::InvalidArgument, "exp expects a bivector");
      const Multivector r = exp_bivector(grade_select(x, 2), tol);
      emit(o, gradedga::to_json(r), format_text(r) + "\n");
    } else if (cmd == "log") {
      const Multivector b = log_rotor(input_multivector(o), tol);
      emit(o, gradedga::to_json(b), format_text(b) + "\n");
    } else if (cmd == "pow") {
      const Multivector r = rotor_power(input_multivector(o), o.t, tol);
      emit(o, gradedga::to_json(r), format_text(r) + "\n");
    } else if (cmd == "factor") {
      const Multivector x = input_multivector(o);
      const bool even = x.is_even(tol);
      if (!even && !x.is_odd(tol)) throw Error(ErrorCode::InvalidArgument, "versor mixes even and odd grades");
      const Factorization f = even ? factor_even(x, tol) : factor_odd(x, tol);
      Json rotors = Json::array();
      std::string text;
      if (f.reflection) text += "reflection: " + format_text(*f.reflection) + "\n";
      for (const auto& r : f.rotors) {
        rotors.push_back(gradedga::to_json(r));
        text += "rotor: " + format_text(r) + "\n";
      }
      emit(o,
           Json{{"parity", even ? "even" : "odd"},
                {"reflection", f.reflection ? gradedga::to_json(*f.reflection) : Json(nullptr)},
                {"rotors", rotors}},
           text);
    } else if (cmd == "sandwich") {
      const Json j = input_json(o);
      if (!j.is_object() || !j.contains("versor") || !j.contains("operand")) {
        throw UsageError("sandwich input needs \"versor\" and \"operand\"");
      }
      const AlgebraPtr alg = cli_algebra(o);
      const Multivector u = multivector_from_json(j["versor"], alg);
      const Multivector x = multivector_from_json(j["operand"], u.algebra_ptr());
      const Multivector y = sandwich(Versor::from_multivector(u, tol), x);
      emit(o, gradedga::to_json(y), format_text(y) + "\n");
    }
    return kOk;
  }

  RepMatrices rep_for(const AlgebraPtr& alg, const Options& o, std::string_view fallback = {}) {
    if (!o.order.empty()) return build_rep(alg, o.order);
    if (!fallback.empty()) return build_rep(alg, fallback);
    return build_rep(alg);
  }

  int matrix_rep(const Options& o) {
    check_format(o, {"json", "csv"});
    if (o.basis) {
      const AlgebraPtr alg = cli_algebra(o);
      if (!alg) throw UsageError("--basis needs --algebra");
      const RepMatrices rep = rep_for(alg, o);
      if (o.format == "csv") {
        std::string s;
        for (std::size_t i = 0; i < rep.dim(); ++i) {
          s += "# C " + rep.order()[i].name + "\n" + matrix_to_csv(rep.clifford()[i].to_dense());
        }
        write(o, s);
        return kOk;
      }
      Json gens = Json::array(), cs = Json::array();
      for (const auto& e : rep.generators()) gens.push_back(monomial_to_json(e));
      for (const auto& c : rep.clifford()) cs.push_back(monomial_to_json(c));
      write(o, dump(Json{{"order", order_to_json(rep.order())},
                         {"generators", gens},
                         {"ordering", monomial_to_json(rep.ordering())},
                         {"clifford", cs}}) +
                   "\n");
      return kOk;
    }
    const Multivector x = input_multivector(o);
    const RepMatrices rep = rep_for(x.algebra_ptr(), o);
    const Eigen::MatrixXcd d = rep_matrix(x, rep);
    if (o.format == "csv") {
      write(o, matrix_to_csv(d));
    } else {
      write(o, dump(Json{{"order", order_to_json(rep.order())}, {"matrix", matrix_to_json(d)}}) + "\n");
    }
    return kOk;
  }

  int conj_matrix(const Options& o, const Tolerance& tol) {
    check_format(o, {"json", "csv"});
    const Multivector u = input_multivector(o);
    const RepMatrices rep = rep_for(u.algebra_ptr(), o, o.blocks ? kE3BladeOrder : std::string_view{});
    const ConjugationMatrix cm = conjugation_matrix(Versor::from_multivector(u, tol), rep);
    if (o.blocks) {
      const E3Blocks b = e3_blocks(cm, rep);
      if (o.format == "csv") {
        write(o, "# D1\n" + matrix_to_csv(b.d1) + "# D2\n" + matrix_to_csv(b.d2) + "# D3\n" +
                     matrix_to_csv(b.d3) + "# D4\n" + matrix_to_csv(b.d4) + "# D5\n" + matrix_to_csv(b.d5));
      } else {
        write(o, dump(Json{{"D1", matrix_to_json(b.d1)},
                           {"D2", matrix_to_json(b.d2)},
                           {"D3", matrix_to_json(b.d3)},
                           {"D4", matrix_to_json(b.d4)},
                           {"D5", matrix_to_json(b.d5)}}) +
                     "\n");
      }
      return kOk;
    }
    if (o.format == "csv") {
      write(o, matrix_to_csv(cm.A));
    } else {
      write(o, dump(Json{{"order", order_to_json(rep.order())},
                         {"matrix", matrix_to_json(cm.A)},
                         {"off_block_max", cm.off_block_max}}) +
                   "\n");
    }
    return kOk;
  }

  int demo(const Options& o, const Tolerance& tol) {
    check_format(o, {"json", "text"});
    Report r;
    if (o.demo == "riesz") {
      r = demos::riesz(tol);
    } else if (o.demo == "chasles") {
      r = demos::chasles(o.seed, tol);
    } else if (o.demo == "wigner") {
      r = demos::wigner(o.seed, tol);
    } else if (o.demo == "pauli") {
      r = demos::pauli(tol);
    } else if (o.demo == "e3-blocks") {
      r = demos::e3_blocks(o.seed, tol);
    } else {
      throw UsageError("unknown demo '" + o.demo + "'");
    }
    std::string text;
    for (const auto& c : r.checks) {
      text += std::string(c.informational ? "info " : (c.pass() ? "PASS " : "FAIL ")) + c.name +
              "  residual " + format_double(c.residual) + "\n";
    }
    emit(o, r.to_json(), text);
    return r.pass() ? kOk : kDemoFailed;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  return Runner(in, out, err).run(args);
}

}  // namespace gradedga::cli
