// conres: E^1 tables, link homology, quotient Poincaré polynomials, checks,
// orders of degree-2 classes and stabilization bounds.
//
// stdout carries the document, stderr the diagnostics.
// Exit codes: 0 ok, 1 usage error, 2 consistency failure.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conres/conres.hpp"
#include "conres/io.hpp"

namespace {

using conres::io::json;

constexpr int kUsage = 1;
constexpr int kConsistency = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int max_n = 10;
  std::string format = "json";
  std::string view = "hom";
  std::string parts;
  std::string character = "trivial";
  std::string seq;
  std::string checks = "h_polynomials,block_parity,table_total,miller,oracle";
  bool koszul = false;
  bool total_degree = false;
  unsigned threads = 1;
  int budget = 8;
  // stab
  int p = 1;
  int q = 0;
  int degree = -1;
  int p_min = 1;
  int total_max = -1;
};

std::vector<std::string> arguments;

json header(const std::string& name) {
  return {{"name", name}, {"version", conres::io::kVersion}, {"arguments", arguments}};
}

void require_n(const Options& o, int lo) {
  if (o.n < lo || o.n > o.max_n)
    throw UsageError("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(o.max_n) + "]");
}

void emit_json(const std::string& name, json payload) {
  json doc = {{"command", header(name)}};
  doc.update(payload);
  std::cout << doc.dump(2) << '\n';
}

template <class Var>
void emit_poly(const std::string& name, const Options& o, const conres::Laurent<Var>& p, json extra) {
  if (o.format == "json") {
    extra["variable"] = std::string(1, Var::symbol);
    extra["poincare"] = conres::io::poly_to_json(p);
    emit_json(name, extra);
  } else if (o.format == "csv") {
    std::cout << conres::io::poly_to_csv(p);
  } else {
    std::cout << p.to_string() << '\n';
  }
}

std::vector<conres::Coeff> parse_sequence(const std::string& text) {
  std::vector<conres::Coeff> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      throw UsageError("malformed --seq '" + text + "'");
    }
    if (used != item.size()) throw UsageError("malformed --seq '" + text + "'");
  }
  if (out.empty()) throw UsageError("--seq must not be empty");
  return out;
}

conres::Resolution make_resolution(const Options& o) {
  return conres::Resolution(o.koszul ? conres::SignRule::koszul : conres::SignRule::transposition);
}

int cmd_table(const Options& o) {
  require_n(o, 2);
  const auto resolution = make_resolution(o);
  const auto doc = conres::io::make_document(resolution.spectral_table(o.n, o.threads), conres::io::parse_view(o.view));
  if (o.format == "json")
    emit_json("table", conres::io::table_to_json(doc));
  else if (o.format == "csv")
    std::cout << conres::io::table_to_csv(doc, o.total_degree);
  else
    std::cout << conres::io::table_to_markdown(doc, o.total_degree);
  return 0;
}

int cmd_link(const Options& o) {
  require_n(o, 3);
  const auto resolution = make_resolution(o);
  emit_poly("link", o, resolution.link_poincare(o.n), {{"n", o.n}});
  return 0;
}

int cmd_gamma(const Options& o) {
  require_n(o, 1);
  const auto A = conres::MultiIndex::parse(o.parts);
  if (A.empty()) throw UsageError("--parts is required");
  conres::Character chi;
  if (o.character == "trivial")
    chi = conres::Character::trivial;
  else if (o.character == "sign")
    chi = conres::Character::sign;
  else
    throw UsageError("--character must be trivial or sign");
  emit_poly("gamma", o, conres::gamma_poincare(A, o.n, chi), {{"n", o.n}, {"parts", A.key()}, {"character", o.character}});
  return 0;
}

int cmd_verify(const Options& o) {
  require_n(o, 2);
  conres::VerifyOptions opt;
  opt.h_polys = opt.block_parity = opt.table_total = opt.miller = opt.oracle = false;
  opt.budget.max_n = o.budget;
  std::stringstream ss(o.checks);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "h_polynomials") opt.h_polys = true;
    else if (item == "block_parity") opt.block_parity = true;
    else if (item == "table_total") opt.table_total = true;
    else if (item == "miller") opt.miller = true;
    else if (item == "oracle") opt.oracle = true;
    else throw UsageError("unknown check '" + item + "'");
  }
  const auto report = make_resolution(o).verify(o.n, opt);
  for (const auto& c : report.checks)
    for (const auto& d : c.details)
      if (c.status == conres::CheckStatus::failed) std::cerr << c.name << ": " << d << '\n';
  if (o.format == "json") {
    emit_json("verify", conres::io::verify_to_json(report));
  } else if (o.format == "csv") {
    std::cout << "check,status\n";
    for (const auto& c : report.checks) std::cout << c.name << "," << conres::io::status_name(c.status) << '\n';
  } else {
    for (const auto& c : report.checks) std::cout << "- " << c.name << ": " << conres::io::status_name(c.status) << '\n';
  }
  return report.ok() ? 0 : kConsistency;
}

int cmd_order(const Options& o) {
  const conres::DegreeTwoClass alpha(parse_sequence(o.seq));
  const int order = conres::h2_order(alpha);
  if (o.format == "json")
    emit_json("order", {{"sequence", alpha.alpha()}, {"order", order}});
  else if (o.format == "csv")
    std::cout << "order\n" << order << '\n';
  else
    std::cout << order << '\n';
  return 0;
}

int cmd_stab(const Options& o) {
  if (!o.parts.empty()) {
    if (o.degree < 0) throw UsageError("--degree is required with --parts");
    const auto r = conres::stab_index(conres::MultiIndex::parse(o.parts), o.degree);
    if (o.format == "json")
      emit_json("stab", {{"parts", r.A.key()}, {"degree", r.degree}, {"stab_n", r.stab_n},
                         {"witness", conres::io::poly_to_json(r.witness)}});
    else if (o.format == "csv")
      std::cout << "parts,degree,stab_n\n\"" << r.A.key() << "\"," << r.degree << ',' << r.stab_n << '\n';
    else
      std::cout << "stab((" << r.A.key() << "), " << r.degree << ") = " << r.stab_n << '\n';
    return 0;
  }
  const auto resolution = make_resolution(o);
  if (o.p_min <= 0) {
    if (o.total_max < 0) throw UsageError("--total-max is required with --p-min");
    const auto cells = conres::stable_table(o.p_min, o.total_max, resolution);
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& c : cells) arr.push_back({{"p", c.p}, {"q", c.q}, {"n_star", c.n_star}, {"ranks", c.ranks}});
      emit_json("stab", {{"cells", arr}});
    } else {
      std::cout << (o.format == "csv" ? "p,q,n_star,rank\n" : "");
      for (const auto& c : cells) {
        if (o.format == "csv")
          std::cout << c.p << ',' << c.q << ',' << c.n_star << ',' << c.ranks[0] << '\n';
        else
          std::cout << "E_1^{" << c.p << "," << c.q << "}: rank " << c.ranks[0] << " from n = " << c.n_star << '\n';
      }
    }
    return 0;
  }
  if (o.p > 0) throw UsageError("stab needs --p and --q, --parts and --degree, or --p-min and --total-max");
  const auto bound = conres::e1_stable_bound(o.p, o.q);
  if (bound.n + 2 > o.max_n) throw UsageError("stable bound exceeds --max-n");
  std::vector<conres::Coeff> ranks;
  for (int k = 0; k < 3; ++k) ranks.push_back(resolution.spectral_table(bound.n + k).cohomological_rank(o.p, o.q));
  const bool stable = ranks[0] == ranks[1] && ranks[0] == ranks[2];
  if (!stable) std::cerr << "E_1^{" << o.p << "," << o.q << "} is not stable at the bound\n";
  if (o.format == "json") {
    json payload = {{"p", o.p}, {"q", o.q}, {"n_star", bound.n}, {"ranks", ranks}, {"stable", stable}};
    if (bound.note) payload["note"] = *bound.note;
    emit_json("stab", payload);
  } else if (o.format == "csv") {
    std::cout << "p,q,n_star,rank\n" << o.p << ',' << o.q << ',' << bound.n << ',' << ranks[0] << '\n';
  } else {
    std::cout << "E_1^{" << o.p << "," << o.q << "} stabilizes by n = " << bound.n << " with rank " << ranks[0] << '\n';
  }
  return stable ? 0 : kConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  for (int k = 1; k < argc; ++k) arguments.emplace_back(argv[k]);

  CLI::App app{"Conical-resolution spectral sequence for Hermitian matrices with multiple eigenvalues"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--max-n", o.max_n, "Largest accepted n");
    sub->add_flag("--koszul", o.koszul, "Use the Koszul sign rule on tensor factors");
  };

  auto* table = app.add_subcommand("table", "E^1 table of the main spectral sequence");
  table->add_option("--n", o.n, "Matrix size")->required();
  table->add_option("--view", o.view, "hom or cohom")->check(CLI::IsMember({"hom", "cohom"}));
  table->add_flag("--total-degree", o.total_degree, "Index rows by total degree i instead of q");
  table->add_option("--threads", o.threads, "Worker threads for block computations");
  common(table);

  auto* link = app.add_subcommand("link", "Reduced homology of the link of the order complex");
  link->add_option("--n", o.n, "Matrix size")->required();
  common(link);

  auto* gamma = app.add_subcommand("gamma", "Poincaré polynomial of a space of orthogonal subspace collections");
  gamma->add_option("--parts", o.parts, "Multiindex, e.g. 2,2")->required();
  gamma->add_option("--n", o.n, "Ambient dimension")->required();
  gamma->add_option("--character", o.character, "trivial or sign")->check(CLI::IsMember({"trivial", "sign"}));
  common(gamma);

  auto* verify = app.add_subcommand("verify", "Run the consistency checks");
  verify->add_option("--n", o.n, "Matrix size")->required();
  verify->add_option("--checks", o.checks, "Comma-separated checks");
  verify->add_option("--budget", o.budget, "Largest n for the naive character oracle");
  common(verify);

  auto* order = app.add_subcommand("order", "Order of a degree-2 class given by its coefficient sequence");
  order->add_option("--seq", o.seq, "Comma-separated integers")->required();
  common(order);

  auto* stab = app.add_subcommand("stab", "Stabilization bounds");
  stab->add_option("--p", o.p, "Cohomological p (<= 0)");
  stab->add_option("--q", o.q, "Cohomological q");
  stab->add_option("--parts", o.parts, "Multiindex for stab(A, degree)");
  stab->add_option("--degree", o.degree, "Real cohomological degree");
  stab->add_option("--p-min", o.p_min, "Smallest p of a stable table");
  stab->add_option("--total-max", o.total_max, "Largest p + q of a stable table");
  common(stab);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*table) return cmd_table(o);
    if (*link) return cmd_link(o);
    if (*gamma) return cmd_gamma(o);
    if (*verify) return cmd_verify(o);
    if (*order) return cmd_order(o);
    if (*stab) return cmd_stab(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const conres::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const conres::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kUsage;
  } catch (const conres::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kConsistency;
  }
  return kUsage;
}
