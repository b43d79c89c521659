#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "triweights/interp.hpp"
#include "triweights/svg.hpp"

using namespace triweights;

namespace {

// Shortest round-trip formatting so repeated runs are byte-identical.
std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Triangle parse_triangle(const std::string& spec) {
  std::istringstream in(spec);
  std::vector<Vec2> pts;
  std::string tok;
  while (in >> tok) {
    size_t comma = tok.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("--triangle", "expected three 'x,y' pairs");
    pts.push_back(Vec2{parse_rational(tok.substr(0, comma)), parse_rational(tok.substr(comma + 1))});
  }
  if (pts.size() != 3) throw CLI::ValidationError("--triangle", "expected three 'x,y' pairs");
  return Triangle(pts[0], pts[1], pts[2]);
}

std::vector<BaryPoint> parse_gamma_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--gamma-file", "cannot open " + path);
  std::vector<BaryPoint> out;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw CLI::ValidationError("--gamma-file", "expected three coordinates per line");
    out.push_back(
        BaryPoint(parse_rational(toks[0]), parse_rational(toks[1]), parse_rational(toks[2])));
  }
  if (out.empty()) throw CLI::ValidationError("--gamma-file", "no points in " + path);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

int cell_count(int r, int k) {
  if (k == 0) return (r + 1) * (r + 2) / 2;
  if (k == 1) return r * (r + 1);
  return r * (r - 1) / 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"physical weights for polynomial differential forms on a triangle"};
  app.require_subcommand(1);

  std::string triangle_spec, gamma_path, out_path, format;
  int r = 0, r_max = 0, k = -1, quad_order = 20, norm_density = 40;
  std::string basis_choice = "auto";

  auto add_common = [&](CLI::App* cmd, bool with_triangle) {
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    if (with_triangle)
      cmd->add_option("--triangle", triangle_spec,
                      "three vertices 'x,y x,y x,y' (rational entries, counterclockwise)");
  };

  CLI::App* dims = app.add_subcommand("dims", "space dimensions and cell counts");
  dims->add_option("--r", r, "sequence level")->required()->check(CLI::PositiveNumber);
  dims->add_option("--k", k, "restrict to one form degree")->check(CLI::Range(0, 2));
  dims->add_option("--format", format, "text or json")->default_val("text");
  add_common(dims, false);

  CLI::App* certify = app.add_subcommand("certify", "build and certify the weight systems");
  certify->add_option("--r", r, "sequence level")->required()->check(CLI::Range(2, 64));
  certify->add_option("--gamma-file", gamma_path, "generator points, one 'l0 l1 l2' per line");
  certify->add_option("--format", format, "text or json")->default_val("text");
  add_common(certify, true);

  CLI::App* cond = app.add_subcommand("cond", "conditioning sweep of the weight matrices");
  cond->add_option("--r-max", r_max, "largest sequence level")->default_val(6)->check(CLI::Range(1, 16));
  cond->add_option("--basis", basis_choice, "auto, bary or cart")
      ->check(CLI::IsMember({"auto", "bary", "cart"}));
  cond->add_option("--format", format, "csv or json")->default_val("csv");
  add_common(cond, true);

  CLI::App* interp = app.add_subcommand("interp", "interpolation error sweep");
  interp->add_option("--r-max", r_max, "largest polynomial degree")->default_val(5)->check(CLI::Range(1, 12));
  interp->add_option("--quad-order", quad_order, "quadrature order")->default_val(20);
  interp->add_option("--norm-density", norm_density, "norm sampling density")->default_val(40);
  interp->add_option("--format", format, "csv or json")->default_val("csv");
  add_common(interp, true);

  CLI::App* cells = app.add_subcommand("cells", "render the cell partition as SVG");
  cells->add_option("--r", r, "sequence level")->required()->check(CLI::Range(2, 64));
  cells->add_option("--gamma-file", gamma_path, "generator points, one 'l0 l1 l2' per line");
  add_common(cells, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dims->parsed()) {
      std::ostringstream text;
      nlohmann::ordered_json j;
      for (int kk = 0; kk <= 2; ++kk) {
        if (k >= 0 && kk != k) continue;
        if (r < kk) continue;
        int dim = space_dim(r, kk);
        bool have_cells = kk == 0 || r >= 2;
        std::string count = have_cells ? std::to_string(cell_count(r, kk)) : "-";
        text << "r=" << r << " k=" << kk << " dim=" << dim << " cells=" << count << "\n";
        nlohmann::ordered_json row;
        row["r"] = r;
        row["k"] = kk;
        row["dim"] = dim;
        if (have_cells)
          row["cells"] = cell_count(r, kk);
        else
          row["cells"] = nullptr;
        j.push_back(row);
      }
      emit(format == "json" ? j.dump(2) + "\n" : text.str(), out_path);
      return 0;
    }

    if (certify->parsed()) {
      Triangle t = triangle_spec.empty() ? Triangle::unit_right() : parse_triangle(triangle_spec);
      VerifyReport rep;
      try {
        rep = gamma_path.empty() ? verify_all(t, r)
                                 : verify_all(t, r, parse_gamma_file(gamma_path));
      } catch (const CLI::Error&) {
        throw;
      } catch (const std::exception& e) {
        std::cerr << "certification failed: " << e.what() << "\n";
        return 1;
      }
      if (format == "json") {
        emit(to_json(rep), out_path);
      } else {
        std::ostringstream text;
        text << "level " << rep.r << "\n";
        text << "complex: " << (rep.complex.ok ? "ok" : "FAILED") << " (points="
             << rep.complex.n_points << " edges=" << rep.complex.n_edges
             << " cells=" << rep.complex.n_cells << " euler=" << rep.complex.euler << ")\n";
        for (const auto& f : rep.complex.failures) text << "  failure: " << f << "\n";
        for (int kk = 0; kk <= 2; ++kk)
          text << "k=" << kk << ": dim=" << rep.dims[kk] << " rank=" << rep.ranks[kk]
               << (rep.unisolvent[kk] ? " unisolvent" : " RANK-DEFICIENT")
               << " cond2=" << fmt(rep.cond[kk]) << "\n";
        text << "commuting: " << (rep.commuting ? "ok" : "FAILED") << "\n";
        text << (rep.ok ? "ok\n" : "FAILED\n");
        emit(text.str(), out_path);
      }
      return rep.ok ? 0 : 1;
    }

    if (cond->parsed()) {
      Triangle t = triangle_spec.empty() ? Triangle::unit_right() : parse_triangle(triangle_spec);
      std::ostringstream csv;
      csv << "r,k,degree,basis,cond2\n";
      nlohmann::ordered_json j;
      for (int level = 1; level <= r_max; ++level)
        for (int kk = 0; kk <= 2; ++kk) {
          int degree = level - kk;
          if (degree < 1) continue;
          Basis basis = basis_choice == "bary"   ? Basis::Barycentric
                        : basis_choice == "cart" ? Basis::Cartesian
                        // Matched to the published table: Cartesian for the
                        // scalar and area columns, barycentric for edges.
                        : kk == 1 ? Basis::Barycentric
                                  : Basis::Cartesian;
          double value;
          if (kk == 0) {
            value = cond2(lattice_vandermonde(t, degree, basis));
          } else {
            DofComplex c = build_complex(t, level);
            value = cond2(vandermonde(c, kk, basis));
          }
          const char* bname = basis == Basis::Barycentric ? "bary" : "cart";
          csv << level << "," << kk << "," << degree << "," << bname << "," << fmt(value) << "\n";
          nlohmann::ordered_json row;
          row["r"] = level;
          row["k"] = kk;
          row["degree"] = degree;
          row["basis"] = bname;
          row["cond2"] = value;
          j.push_back(row);
        }
      emit(format == "json" ? j.dump(2) + "\n" : csv.str(), out_path);
      return 0;
    }

    if (interp->parsed()) {
      Triangle t = triangle_spec.empty() ? Triangle::unit_right() : parse_triangle(triangle_spec);
      auto rows = convergence_experiment(t, r_max, quad_order, norm_density);
      std::ostringstream csv;
      csv << "r,k,residual_norm,norm_reference\n";
      nlohmann::ordered_json j;
      for (const auto& row : rows) {
        csv << row.degree << "," << row.k << "," << fmt(row.residual) << ","
            << fmt(row.reference) << "\n";
        nlohmann::ordered_json jr;
        jr["r"] = row.degree;
        jr["k"] = row.k;
        jr["residual_norm"] = row.residual;
        jr["norm_reference"] = row.reference;
        j.push_back(jr);
      }
      emit(format == "json" ? j.dump(2) + "\n" : csv.str(), out_path);
      return 0;
    }

    if (cells->parsed()) {
      Triangle t = triangle_spec.empty()
                       ? Triangle(Vec2{2, 4}, Vec2{0, 0}, Vec2{4, 0})
                       : parse_triangle(triangle_spec);
      DofComplex c = gamma_path.empty() ? build_complex(t, r)
                                        : build_complex(t, r, parse_gamma_file(gamma_path));
      emit(cells_svg(c), out_path);
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
