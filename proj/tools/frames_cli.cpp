// frames_cli: generators and analyses over JSON documents.
//
// Exit codes: 0 success, 1 a mathematical check came out false, 2 bad input.

#include "frames/frames.hpp"
#include "frames/io.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using frames::io::json;
namespace fio = frames::io;

struct Globals {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool csv = false;
  std::string out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw fio::FormatError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const Globals& g, const json& j) {
  Output out(g.out);
  out.stream() << j.dump(2) << '\n';
}

template <typename Surface>
void emit_surface(const Globals& g, const Surface& s) {
  Output out(g.out);
  if (g.csv) {
    fio::write_csv(out.stream(), s);
  } else {
    out.stream() << fio::to_json(s).dump(2) << '\n';
  }
}

frames::Tolerance tolerance(const Globals& g) { return {g.tol, 1e-12}; }

std::vector<long> to_long(const std::vector<int>& v) { return {v.begin(), v.end()}; }

json real_vector(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

frames::FiniteAbelianGroup load_group(const std::string& path, const std::vector<int>& cyclic) {
  if (!cyclic.empty()) return frames::FiniteAbelianGroup(cyclic);
  if (path.empty()) throw fio::FormatError("a group is required (--group FILE or --cyclic n1,n2,...)");
  return fio::group_from_json(fio::find_document(fio::load(path), "group"));
}

frames::OpTable load_table(const std::string& path) {
  return fio::optable_from_json(fio::find_document(fio::load(path), "optable"));
}

frames::Frame load_frame(const std::string& path) {
  return fio::frame_from_json(fio::find_document(fio::load(path), "frame"));
}

frames::VVSignal load_signal(const std::string& path) {
  return fio::signal_from_json(fio::find_document(fio::load(path), "signal"));
}

frames::SelectionMap selection_for(long n, const std::vector<int>& s, const std::string& path) {
  if (!path.empty()) return fio::selection_from_json(fio::find_document(fio::load(path), "selection"));
  if (s.empty()) throw fio::FormatError("a selection map is required (--s v1,v2,... or --selection FILE)");
  return frames::SelectionMap(n, to_long(s));
}

/// The tight frame {(1+i,1-i), (0,2), (1-i,1+i), (2,0)} indexed by Z/4.
frames::Frame z4_example_frame() {
  using frames::Complex;
  frames::ComplexMatrix m(2, 4);
  m << Complex(1, 1), Complex(0, 0), Complex(1, -1), Complex(2, 0),
       Complex(1, -1), Complex(2, 0), Complex(1, 1), Complex(0, 0);
  return frames::Frame(std::move(m));
}

json certificate_json(const frames::HarmonicCertificate& c) {
  return {{"c", c.c},
          {"unitary", fio::matrix_to_json(c.unitary)},
          {"character_indices", c.character_indices},
          {"characters", fio::matrix_to_json(c.characters)},
          {"fit_deviation", c.fit_deviation},
          {"law_deviation", c.law_deviation}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frames, vector-valued DFT, frame multiplication, ambiguity and uncertainty"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--tol", g.tol, "Relative tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized generators")->capture_default_str();
  app.add_flag("--csv", g.csv, "Write surfaces as CSV");
  app.add_option("--out", g.out, "Output file (default stdout)");

  // Shared option storage.
  long n_opt = 0;
  long d_opt = 0;
  long l_opt = 0;
  std::vector<int> s_opt;
  std::vector<int> cyclic_opt;
  std::vector<int> k_opt;
  double alpha = 0.5;
  double beta = 0.25;
  std::string frame_path;
  std::string frame2_path;
  std::string table_path;
  std::string group_path;
  std::string signal_path;
  std::string signal2_path;
  std::string selection_path;
  std::string q_path;
  std::string candidates_path;
  bool classical = false;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate documents");
  gen->require_subcommand(1);
  auto* gen_dft = gen->add_subcommand("dft-frame", "DFT frame for a selection map");
  gen_dft->add_option("--N", n_opt)->required();
  gen_dft->add_option("--d", d_opt);
  gen_dft->add_option("--s", s_opt)->required()->delimiter(',');
  auto* gen_sel = gen->add_subcommand("selection", "Selection map document");
  gen_sel->add_option("--N", n_opt)->required();
  gen_sel->add_option("--s", s_opt)->required()->delimiter(',');
  auto* gen_harm = gen->add_subcommand("harmonic-frame", "Rows of a character table");
  gen_harm->add_option("--cyclic,--orders", cyclic_opt)->required()->delimiter(',');
  gen_harm->add_option("--K", k_opt, "Character indices")->required()->delimiter(',');
  auto* gen_z4 = gen->add_subcommand("z4-frame", "Tight Z/4 group frame in C^2 with vectors (1+i,1-i),(0,2),(1-i,1+i),(2,0)");
  auto* gen_cross = gen->add_subcommand("cross-frame", "Cross-product frame and its table (bundle)");
  auto* gen_table = gen->add_subcommand("group-table", "Operation table of a finite Abelian group");
  gen_table->add_option("--cyclic,--orders", cyclic_opt)->required()->delimiter(',');
  auto* gen_group = gen->add_subcommand("group", "Group document");
  gen_group->add_option("--cyclic,--orders", cyclic_opt)->required()->delimiter(',');
  auto* gen_signal = gen->add_subcommand("signal", "Random complex Gaussian signal");
  gen_signal->add_option("--N", n_opt)->required();
  gen_signal->add_option("--d", d_opt)->default_val(1);
  auto* gen_nofm = gen->add_subcommand("nofm-frame", "{(1,0),(0,1),(alpha,beta)}");
  gen_nofm->add_option("--alpha", alpha)->capture_default_str();
  gen_nofm->add_option("--beta", beta)->capture_default_str();

  // analyses
  auto* classify = app.add_subcommand("classify", "Frame bounds and tightness flags");
  classify->add_option("--frame", frame_path)->required();

  auto* equiv = app.add_subcommand("equiv", "Unitary equivalence x_j = c U y_j of two tight frames");
  equiv->add_option("--frame", frame_path)->required();
  equiv->add_option("--frame2", frame2_path)->required();

  auto* dft = app.add_subcommand("dft", "Vector-valued DFT");
  dft->require_subcommand(1);
  std::vector<CLI::App*> dft_dirs;
  for (const char* name : {"fwd", "inv"}) {
    auto* c = dft->add_subcommand(name, std::string(name) == "fwd" ? "Forward transform" : "Inverse transform");
    c->add_option("--signal", signal_path)->required();
    c->add_option("--N", n_opt);
    c->add_option("--s", s_opt)->delimiter(',');
    c->add_option("--selection", selection_path);
    dft_dirs.push_back(c);
  }

  auto* conv = app.add_subcommand("conv", "Vector-valued convolution");
  conv->add_option("--signal", signal_path)->required();
  conv->add_option("--signal2", signal2_path)->required();

  auto* gelfand = app.add_subcommand("gelfand", "Multiplicative functionals of the convolution algebra");
  gelfand->add_option("--N", n_opt);
  gelfand->add_option("--s", s_opt)->delimiter(',');
  gelfand->add_option("--selection", selection_path);
  gelfand->add_option("--signal", signal_path, "Evaluate every functional on this signal");

  auto* mult = app.add_subcommand("mult", "Frame multiplications");
  mult->require_subcommand(1);
  auto* mult_check = mult->add_subcommand("check", "Test one operation table");
  mult_check->add_option("--frame", frame_path)->required();
  mult_check->add_option("--table", table_path)->required();
  auto* mult_enum = mult->add_subcommand("enumerate", "All frame multiplications (small N or candidates)");
  mult_enum->add_option("--frame", frame_path)->required();
  mult_enum->add_option("--candidates", candidates_path, "JSON array of optable documents");

  auto* gmatrix = app.add_subcommand("gmatrix", "Is the Gramian a G-matrix");
  gmatrix->add_option("--frame", frame_path)->required();
  gmatrix->add_option("--group", group_path);
  gmatrix->add_option("--cyclic,--orders", cyclic_opt)->delimiter(',');

  auto* harmonic = app.add_subcommand("harmonic", "Harmonic-frame certificate");
  harmonic->add_option("--frame", frame_path)->required();
  harmonic->add_option("--group", group_path);
  harmonic->add_option("--cyclic,--orders", cyclic_opt)->delimiter(',');

  auto* amb = app.add_subcommand("amb", "Ambiguity surfaces");
  amb->require_subcommand(1);
  auto* amb_scalar = amb->add_subcommand("scalar", "Scalar periodic ambiguity of a d = 1 signal");
  amb_scalar->add_option("--signal", signal_path)->required();
  auto* amb_a1 = amb->add_subcommand("a1", "C-valued ambiguity over a frame multiplication");
  amb_a1->add_option("--signal", signal_path)->required();
  amb_a1->add_option("--frame", frame_path)->required();
  amb_a1->add_option("--table", table_path)->required();
  auto* amb_apd = amb->add_subcommand("apd", "C^d-valued ambiguity for a DFT frame");
  amb_apd->add_option("--signal", signal_path)->required();
  amb_apd->add_option("--s", s_opt)->delimiter(',');
  amb_apd->add_option("--selection", selection_path);

  auto* up = app.add_subcommand("up", "Uncertainty principle");
  up->require_subcommand(1);
  auto* up_verify = up->add_subcommand("verify", "Evaluate both sides of the inequality");
  up_verify->add_option("--signal", signal_path)->required();
  up_verify->add_flag("--classical", classical, "Use q = i(e^1 - e^-1)");
  up_verify->add_option("--s", s_opt)->delimiter(',');
  up_verify->add_option("--selection", selection_path);
  up_verify->add_option("--q", q_path, "Real multiplier as a signal document");

  auto* dmatrix = app.add_subcommand("dmatrix", "Singular values and rank of D_l");
  dmatrix->add_option("--N", n_opt)->required();
  dmatrix->add_option("--l", l_opt)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const frames::Tolerance tol = tolerance(g);

    if (gen->parsed()) {
      if (gen_dft->parsed()) {
        if (*gen_dft->get_option("--d") && d_opt != static_cast<long>(s_opt.size())) {
          throw fio::FormatError("--d does not match the length of --s");
        }
        emit(g, fio::to_json(frames::make_dft_frame(frames::SelectionMap(n_opt, to_long(s_opt)))));
      } else if (gen_sel->parsed()) {
        emit(g, fio::to_json(frames::SelectionMap(n_opt, to_long(s_opt))));
      } else if (gen_harm->parsed()) {
        emit(g, fio::to_json(frames::make_harmonic_frame(frames::FiniteAbelianGroup(cyclic_opt), k_opt)));
      } else if (gen_z4->parsed()) {
        emit(g, fio::to_json(z4_example_frame()));
      } else if (gen_cross->parsed()) {
        const frames::CrossProductFrame c = frames::cross_product_frame();
        emit(g, fio::bundle({fio::to_json(c.frame), fio::to_json(c.table)}));
      } else if (gen_table->parsed()) {
        emit(g, fio::to_json(frames::FiniteAbelianGroup(cyclic_opt).table()));
      } else if (gen_group->parsed()) {
        emit(g, fio::to_json(frames::FiniteAbelianGroup(cyclic_opt)));
      } else if (gen_signal->parsed()) {
        if (n_opt < 1 || d_opt < 1) throw fio::FormatError("--N and --d must be positive");
        std::mt19937_64 rng(g.seed);
        std::normal_distribution<double> normal;
        frames::VVSignal u(n_opt, d_opt);
        for (long m = 0; m < n_opt; ++m) {
          for (long q = 0; q < d_opt; ++q) {
            const double re = normal(rng);
            u(m, q) = frames::Complex(re, normal(rng));
          }
        }
        emit(g, fio::to_json(u));
      } else if (gen_nofm->parsed()) {
        emit(g, fio::to_json(frames::alpha_beta_frame(alpha, beta)));
      }
      return 0;
    }

    if (classify->parsed()) {
      const frames::FrameClass fc = frames::classify(load_frame(frame_path), tol);
      emit(g, {{"spans", fc.spans},
               {"lower_bound", fc.lower_bound},
               {"upper_bound", fc.upper_bound},
               {"tight", fc.tight},
               {"parseval", fc.parseval},
               {"equal_norm", fc.equal_norm},
               {"funtf", fc.funtf}});
      return 0;
    }

    if (equiv->parsed()) {
      const auto cert = frames::unitary_equivalence(load_frame(frame_path), load_frame(frame2_path), tol);
      if (!cert) {
        emit(g, {{"equivalent", false}});
        return 1;
      }
      emit(g, {{"equivalent", true}, {"c", cert->c}, {"unitary", fio::matrix_to_json(cert->unitary)}});
      return 0;
    }

    if (dft->parsed()) {
      const frames::VVSignal u = load_signal(signal_path);
      const frames::SelectionMap sel = selection_for(n_opt ? n_opt : u.length(), s_opt, selection_path);
      emit(g, fio::to_json(dft_dirs[0]->parsed() ? frames::vv_dft(u, sel) : frames::vv_idft(u, sel)));
      return 0;
    }

    if (conv->parsed()) {
      emit(g, fio::to_json(frames::vv_convolve(load_signal(signal_path), load_signal(signal2_path))));
      return 0;
    }

    if (gelfand->parsed()) {
      std::optional<frames::VVSignal> x;
      if (!signal_path.empty()) x = load_signal(signal_path);
      const long n = n_opt ? n_opt : (x ? x->length() : 0);
      const frames::SelectionMap sel = selection_for(n, s_opt, selection_path);
      json list = json::array();
      for (const frames::GelfandFunctional& f : frames::gelfand_spectrum(sel)) {
        json item = {{"p", f.p}, {"q", f.q}, {"column", fio::vector_to_json(f.column)}};
        if (x) item["value"] = fio::complex_to_json(f.apply(*x));
        list.push_back(std::move(item));
      }
      emit(g, {{"count", list.size()}, {"functionals", list}});
      return 0;
    }

    if (mult->parsed()) {
      const frames::Frame x = load_frame(frame_path);
      if (mult_check->parsed()) {
        const frames::MultiplicationCheck r = frames::is_frame_multiplication(x, load_table(table_path), tol);
        json report = {{"accepted", r.accepted}, {"kernel_dim", r.kernel_dim}};
        if (r.violation) {
          report["violation"] = {{"j", r.violation->j},
                                 {"side", r.violation->side == frames::Side::right ? "right" : "left"},
                                 {"residual", r.violation->residual}};
        }
        emit(g, report);
        return r.accepted ? 0 : 1;
      }
      std::optional<std::vector<frames::OpTable>> candidates;
      if (!candidates_path.empty()) {
        const json doc = fio::load(candidates_path);
        if (!doc.is_array()) throw fio::FormatError("candidates must be a JSON array of optable documents");
        candidates.emplace();
        for (const json& t : doc) candidates->push_back(fio::optable_from_json(t));
      }
      frames::EnumerationOptions opts;
      opts.tol = tol;
      const std::vector<frames::OpTable> found = frames::enumerate_multiplications(x, candidates, opts);
      json tables = json::array();
      for (const frames::OpTable& t : found) tables.push_back(fio::to_json(t));
      emit(g, {{"count", found.size()}, {"tables", tables}});
      return found.empty() ? 1 : 0;
    }

    if (gmatrix->parsed()) {
      const frames::Frame x = load_frame(frame_path);
      const frames::FiniteAbelianGroup grp = load_group(group_path, cyclic_opt);
      const auto w = frames::gmatrix_test(frames::gramian(x), grp, tol);
      json report = {{"g_matrix", w.has_value()}, {"gramian", fio::matrix_to_json(frames::gramian(x))}};
      if (w) report["nu"] = fio::vector_to_json(w->nu);
      emit(g, report);
      return w ? 0 : 1;
    }

    if (harmonic->parsed()) {
      const frames::Frame x = load_frame(frame_path);
      const frames::FiniteAbelianGroup grp = load_group(group_path, cyclic_opt);
      if (x.size() != grp.order()) throw frames::DimensionError("frame size does not match group order");
      if (!frames::classify(x, tol).tight || !frames::is_frame_multiplication(x, grp.table(), tol)) {
        emit(g, {{"harmonic", false}});
        return 1;
      }
      json report = certificate_json(frames::harmonic_equivalence(x, grp, tol));
      report["harmonic"] = true;
      emit(g, report);
      return 0;
    }

    if (amb->parsed()) {
      const frames::VVSignal u = load_signal(signal_path);
      if (amb_scalar->parsed()) {
        if (u.dim() != 1) throw frames::DimensionError("scalar ambiguity needs a d = 1 signal");
        emit_surface(g, frames::ambiguity_scalar(u.values().col(0)));
      } else if (amb_a1->parsed()) {
        emit_surface(g, frames::ambiguity_a1(u, load_frame(frame_path), load_table(table_path), tol));
      } else {
        emit_surface(g, frames::ambiguity_apd(u, selection_for(u.length(), s_opt, selection_path)));
      }
      return 0;
    }

    if (up_verify->parsed()) {
      const frames::VVSignal u = load_signal(signal_path);
      if (classical == !q_path.empty()) throw fio::FormatError("give exactly one of --classical or --q");
      const frames::VVSignal q = classical ? frames::classical_q(selection_for(u.length(), s_opt, selection_path))
                                           : load_signal(q_path);
      const frames::UPReport r = frames::verify_up(u, q, tol);
      emit(g, {{"t_term", r.t_term},
               {"s_term", r.s_term},
               {"lhs", r.lhs},
               {"rhs", r.rhs},
               {"holds", r.holds},
               {"slack", r.slack}});
      return r.holds ? 0 : 1;
    }

    if (dmatrix->parsed()) {
      const frames::ComplexMatrix dm = frames::d_matrix(n_opt, l_opt);
      const Eigen::VectorXd sv = frames::singular_values(dm);
      const frames::Index rank = frames::numerical_rank(dm);
      emit(g, {{"N", n_opt},
               {"l", l_opt},
               {"singular_values", real_vector(sv)},
               {"rank", rank},
               {"invertible", rank == dm.rows()}});
      return rank == dm.rows() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
