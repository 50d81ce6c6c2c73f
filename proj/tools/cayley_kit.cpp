// cayley-kit: certify Cayley structure and lattice width of lattice
// polytopes over exact arithmetic.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 malformed input, 3 certificate verification failure.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "cayleykit/cayley.hpp"
#include "cayleykit/degeneration.hpp"
#include "cayleykit/io.hpp"
#include "cayleykit/toric.hpp"
#include "cayleykit/width.hpp"

namespace ck = cayleykit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

void emit(const ck::Json& j) { std::cout << j.dump() << "\n"; }

long checked_long(const ck::Int& x) {
  if (!x.fits_slong_p())
    throw std::invalid_argument("value too large for the output format");
  return x.get_si();
}

ck::LatticePolytope load_polytope(const std::string& path) {
  return ck::to_polytope(
      ck::polytope_document_from_json(ck::load_json_file(path)));
}

ck::LatticePolytope load_full_dimensional(const std::string& path) {
  ck::LatticePolytope p = load_polytope(path);
  if (!p.is_full_dimensional())
    throw std::invalid_argument(
        "polytope is not full-dimensional; restrict it to its affine hull "
        "first");
  return p;
}

int cmd_info(const std::string& file) {
  ck::LatticePolytope p = load_polytope(file);
  ck::Json j;
  j["ambient_dim"] = p.ambient_dim();
  j["dim"] = p.dimension();
  j["vertices"] = p.vertices().size();
  j["points"] = p.lattice_points().size();
  auto index = ck::spanned_lattice_index(p);
  if (index)
    j["span_index"] = checked_long(*index);
  else
    j["span_index"] = "infinite";
  if (p.is_full_dimensional())
    j["nvol"] = checked_long(ck::normalized_volume(p));
  else
    j["nvol"] = nullptr;
  emit(j);
  return kExitOk;
}

int cmd_width(const std::string& file) {
  ck::LatticePolytope p = load_full_dimensional(file);
  ck::WidthCertificate cert = ck::lattice_width(p);
  ck::Json j;
  j["value"] = checked_long(cert.value);
  ck::Json dir = ck::Json::array();
  for (const ck::Int& x : cert.direction) dir.push_back(checked_long(x));
  j["direction"] = dir;
  j["initial_bound"] = checked_long(cert.initial_bound);
  ck::Json rows = ck::Json::array();
  for (std::size_t i = 0; i < cert.difference_basis.rows(); ++i) {
    ck::Json row = ck::Json::array();
    for (std::size_t k = 0; k < cert.difference_basis.cols(); ++k)
      row.push_back(checked_long(cert.difference_basis(i, k)));
    rows.push_back(row);
  }
  j["difference_basis"] = rows;
  emit(j);
  return kExitOk;
}

int cmd_cayley(const std::string& file, long length, bool max) {
  ck::LatticePolytope p = load_full_dimensional(file);
  if (max) {
    std::size_t len = ck::max_cayley_length(p);
    ck::Json j;
    j["max_length"] = len;
    if (len >= 2)
      j["certificate"] =
          ck::certificate_to_json(*ck::find_cayley_structure(p, len - 1));
    else
      j["certificate"] = nullptr;
    emit(j);
    return kExitOk;
  }
  if (length < 1 || static_cast<std::size_t>(length) > p.ambient_dim())
    throw std::invalid_argument("--length out of range");
  auto s = ck::find_cayley_structure(p, static_cast<std::size_t>(length));
  if (!s) {
    ck::Json j;
    j["verdict"] = "none";
    emit(j);
    return kExitNegative;
  }
  emit(ck::certificate_to_json(*s));
  return kExitOk;
}

int cmd_sum(const std::vector<std::string>& files) {
  std::vector<ck::LatticePolytope> parts;
  for (const std::string& f : files) parts.push_back(load_polytope(f));
  emit(ck::polytope_document_to_json(ck::cayley_sum(parts)));
  return kExitOk;
}

int cmd_degenerate(const std::string& poly_file,
                   const std::string& witness_file) {
  ck::LatticePolytope p = load_full_dimensional(poly_file);
  ck::PlaneWitness w =
      ck::witness_from_json(ck::load_json_file(witness_file));
  try {
    ck::CayleyStructure s = ck::recover_cayley(p, w);
    emit(ck::certificate_to_json(s));
  } catch (const ck::StageError& e) {
    ck::Json j;
    j["stage"] = e.stage();
    j["reason"] = e.what();
    emit(j);
    std::cerr << "degeneration failed at stage " << e.stage() << ": "
              << e.what() << "\n";
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_verify(const std::string& poly_file, const std::string& cert_file) {
  ck::LatticePolytope p = load_polytope(poly_file);
  ck::CayleyStructure s =
      ck::certificate_from_json(ck::load_json_file(cert_file));
  ck::VerifyResult vr = ck::verify_cayley_structure(p, s);
  ck::Json j;
  j["ok"] = vr.ok;
  if (!vr.ok) j["reason"] = vr.reason;
  emit(j);
  return vr.ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cayley-kit: Cayley structure and lattice width of lattice "
               "polytopes, over exact arithmetic"};
  app.require_subcommand(1);

  long seed = 0;
  app.add_option("--seed", seed,
                 "random seed for data-generation helpers; core commands are "
                 "deterministic and ignore it");

  std::string file, poly_file, other_file;
  std::vector<std::string> files;
  long length = 0;
  bool max = false;

  CLI::App* info = app.add_subcommand("info", "polytope summary");
  info->add_option("file", file, "polytope JSON file")->required();

  CLI::App* width = app.add_subcommand("width", "lattice width certificate");
  width->add_option("file", file, "polytope JSON file")->required();

  CLI::App* cayley =
      app.add_subcommand("cayley", "find a Cayley structure of given length");
  cayley->add_option("file", file, "polytope JSON file")->required();
  CLI::Option* lopt =
      cayley->add_option("--length", length, "certificate length minus one");
  CLI::Option* mopt =
      cayley->add_flag("--max", max, "report the maximal Cayley length");
  lopt->excludes(mopt);

  CLI::App* sum = app.add_subcommand("sum", "Cayley sum of polytopes");
  sum->add_option("files", files, "polytope JSON files")->required();

  CLI::App* degen = app.add_subcommand(
      "degenerate", "recover a Cayley certificate from a plane witness");
  degen->add_option("polytope", poly_file, "polytope JSON file")->required();
  degen->add_option("witness", other_file, "witness JSON file")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "re-check a Cayley certificate");
  verify->add_option("polytope", poly_file, "polytope JSON file")->required();
  verify->add_option("certificate", other_file, "certificate JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;  // --help and --version exit 0
  }

  try {
    if (app.got_subcommand(info)) return cmd_info(file);
    if (app.got_subcommand(width)) return cmd_width(file);
    if (app.got_subcommand(cayley)) {
      if (!max && lopt->count() == 0)
        throw std::invalid_argument("cayley needs --length or --max");
      return cmd_cayley(file, length, max);
    }
    if (app.got_subcommand(sum)) return cmd_sum(files);
    if (app.got_subcommand(degen)) return cmd_degenerate(poly_file, other_file);
    if (app.got_subcommand(verify)) return cmd_verify(poly_file, other_file);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
