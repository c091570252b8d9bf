// flipkit: flips, contractions, subdivisions, flip-graph search and
// equivalence certificates for triangulated closed surfaces.
//
// Exit codes: 0 ok, 1 io/format, 2 domain violation, 3 budget exhausted.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flipkit/canonical.hpp"
#include "flipkit/io.hpp"
#include "flipkit/map.hpp"
#include "flipkit/moves.hpp"
#include "flipkit/pipeline.hpp"
#include "flipkit/search.hpp"
#include "flipkit/seeds.hpp"

namespace {

using namespace flipkit;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::BadFormat: return 1;
    case Errc::Exhausted: return 3;
    default: return 2;
  }
}

// Empty path means stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  write_text_file(path, text);
}

SurfaceClass surface_or_raise(const std::string& name) {
  auto sc = surface_by_name(name);
  if (!sc) raise(Errc::BadFormat, "unknown surface \"" + name + "\"");
  return *sc;
}

struct BudgetFlags {
  std::uint64_t max_nodes = SearchBudget{}.max_nodes;
  std::int64_t max_depth = -1;
  unsigned threads = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "Search node budget");
    cmd->add_option("--max-depth", max_depth, "Search depth budget");
    cmd->add_option("--threads", threads, "Worker cap for search layers")
        ->check(CLI::Range(1u, 64u));
  }
  SearchBudget budget() const {
    SearchBudget b;
    b.max_nodes = max_nodes;
    if (max_depth >= 0) b.max_depth = static_cast<std::uint64_t>(max_depth);
    return b;
  }
};

FlipMode mode_of(const std::string& s) {
  return s == "all" ? FlipMode::AllFlips : FlipMode::RegularFlips;
}

int run_validate(const std::string& path) {
  TriangulationMap T = load_map_file(path);
  Counts c = T.counts();
  SurfaceClass sc = T.surface_class();
  std::printf("v=%u e=%u f=%u chi=%d %s %s\n", c.v, c.e, c.f,
              sc.euler_characteristic,
              sc.orientable ? "orientable" : "nonorientable",
              T.is_regular() ? "regular" : "singular");
  return 0;
}

int run_move(const std::string& path, const std::string& kind_name,
             std::uint32_t index, const std::string& out,
             bool allow_singular) {
  TriangulationMap T = load_map_file(path);
  MoveKind kind = *move_kind_by_name(kind_name);
  Flag h = resolve_target(canonical_form(T), Move{kind, index});
  TriangulationMap R = [&] {
    switch (kind) {
      case MoveKind::Flip: return flip(T, h);
      case MoveKind::Contract: return contract(T, h);
      default: return face_subdivide(T, h);
    }
  }();
  if (!allow_singular && !R.is_regular())
    raise(Errc::NotRegular,
          "result is singular; pass --allow-singular to keep it");
  emit(out, map_to_json(R));
  return 0;
}

int run_connect(const std::string& path1, const std::string& path2,
                const std::string& out, const std::string& mode,
                const BudgetFlags& bf) {
  TriangulationMap T1 = load_map_file(path1);
  TriangulationMap T2 = load_map_file(path2);
  EquivalenceCertificate cert;
  cert.script = find_path(T1, T2, mode_of(mode), bf.budget(), bf.threads);
  cert.strategy = {
      {"direct-bfs", static_cast<std::uint32_t>(cert.script.moves.size())}};
  emit(out, certificate_to_json(cert));
  return 0;
}

int run_certify(const std::string& path1, const std::string& path2,
                const std::string& out, const BudgetFlags& bf,
                bool no_direct, bool no_theorem) {
  TriangulationMap T1 = load_map_file(path1);
  TriangulationMap T2 = load_map_file(path2);
  CertifyOptions opts;
  opts.budget = bf.budget();
  opts.threads = bf.threads;
  opts.use_direct_search = !no_direct;
  opts.use_theorem_pipeline = !no_theorem;
  CertifyResult r = certify_equivalence(T1, T2, opts);
  std::fprintf(stderr, "status: %s\n", certify_status_name(r.status));
  switch (r.status) {
    case CertifyStatus::Found:
      emit(out, certificate_to_json(*r.certificate));
      return 0;
    case CertifyStatus::ProvablyNotConnected:
      std::fprintf(stderr, "component: %zu classes\n", r.component.size());
      return 2;
    default:
      return 3;
  }
}

int run_verify(const std::string& cert_path, const std::string& start_path,
               const std::string& end_path) {
  EquivalenceCertificate cert = load_certificate_file(cert_path);
  TriangulationMap start = load_map_file(start_path);
  std::optional<TriangulationMap> end;
  if (!end_path.empty()) end = load_map_file(end_path);
  VerifyReport rep =
      verify_certificate_report(cert, start, end ? &*end : nullptr);
  if (rep.ok) {
    std::printf("ok moves=%zu\n", cert.script.moves.size());
    return 0;
  }
  std::printf("rejected move=%u reason=%s\n", rep.move_index,
              rep.reason.c_str());
  return 2;
}

int run_enumerate(const std::string& surface, std::uint32_t v,
                  const std::string& out, const std::string& format,
                  const BudgetFlags& bf) {
  FlipGraphStore store =
      enumerate_triangulations(surface_or_raise(surface), v, bf.budget(),
                               bf.threads);
  std::size_t regular = 0;
  for (const auto& nd : store.nodes) regular += nd.regular ? 1 : 0;
  std::fprintf(stderr, "classes=%zu regular=%zu %s\n", store.nodes.size(),
               regular, store.complete ? "complete" : "truncated");
  emit(out, format == "dot" ? store_to_dot(store) : store_to_json(store));
  return store.complete ? 0 : 3;
}

int run_reduce(const std::string& path, const std::string& out,
               const std::string& script_out) {
  TriangulationMap T = load_map_file(path);
  ReduceResult r = reduce_to_irreducible(T);
  std::fprintf(stderr, "contractions=%zu v=%u\n", r.contractions.moves.size(),
               r.irreducible.counts().v);
  emit(out, map_to_json(r.irreducible));
  if (!script_out.empty())
    write_text_file(script_out, script_to_json(r.contractions));
  return 0;
}

int run_thresholds(const std::string& surface, std::optional<int> chi,
                   std::optional<std::uint32_t> v) {
  Thresholds t =
      surface.empty() ? thresholds_for_chi(*chi)
                      : thresholds(surface_or_raise(surface));
  std::string line = "{\"chi\":" + std::to_string(t.chi) +
                     ",\"N\":" + std::to_string(t.N) +
                     ",\"irreducible_bound\":" +
                     std::to_string(t.irreducible_bound);
  if (v) line += ",\"m\":" + std::to_string(t.m_for(*v));
  line += "}\n";
  std::fputs(line.c_str(), stdout);
  return 0;
}

int run_export_dot(const std::vector<std::string>& paths,
                   const std::string& out, const std::string& mode,
                   const BudgetFlags& bf) {
  std::vector<TriangulationMap> roots;
  roots.reserve(paths.size());
  for (const auto& p : paths) roots.push_back(load_map_file(p));
  FlipGraphStore store = explore(roots, mode_of(mode), bf.budget(),
                                 bf.threads);
  emit(out, store_to_dot(store));
  return store.complete ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangulation flips, searches and certificates"};
  app.require_subcommand(1);
  int rc = 0;

  // validate
  std::string va_path;
  auto* va = app.add_subcommand("validate", "Check a map file, print counts");
  va->add_option("path", va_path, "Map or facet-list JSON")->required();
  va->callback([&] { rc = run_validate(va_path); });

  // move
  std::string mv_path, mv_kind, mv_out;
  std::uint32_t mv_index = 0;
  bool mv_allow_singular = false;
  auto* mv = app.add_subcommand("move", "Apply one move by canonical index");
  mv->add_option("path", mv_path)->required();
  mv->add_option("kind", mv_kind)
      ->required()
      ->check(CLI::IsMember({"flip", "contract", "subdivide"}));
  mv->add_option("index", mv_index)->required();
  mv->add_option("out", mv_out, "Output map file")->required();
  mv->add_flag("--allow-singular", mv_allow_singular,
               "Keep results that are not regular");
  mv->callback(
      [&] { rc = run_move(mv_path, mv_kind, mv_index, mv_out,
                          mv_allow_singular); });

  // connect
  std::string cn_a, cn_b, cn_out, cn_mode = "regular";
  BudgetFlags cn_bf;
  auto* cn = app.add_subcommand("connect",
                                "Find a flip path between two maps");
  cn->add_option("path1", cn_a)->required();
  cn->add_option("path2", cn_b)->required();
  cn->add_option("-o,--out", cn_out, "Certificate file (default stdout)");
  cn->add_option("--mode", cn_mode, "Flip set")
      ->check(CLI::IsMember({"regular", "all"}));
  cn_bf.attach(cn);
  cn->callback([&] { rc = run_connect(cn_a, cn_b, cn_out, cn_mode, cn_bf); });

  // certify
  std::string cf_a, cf_b, cf_out;
  BudgetFlags cf_bf;
  bool cf_no_direct = false, cf_no_theorem = false;
  auto* cf = app.add_subcommand(
      "certify", "Produce a checked equivalence certificate");
  cf->add_option("path1", cf_a)->required();
  cf->add_option("path2", cf_b)->required();
  cf->add_option("-o,--out", cf_out, "Certificate file (default stdout)");
  cf->add_flag("--no-direct", cf_no_direct, "Skip the direct search");
  cf->add_flag("--no-theorem", cf_no_theorem, "Skip the reduction pipeline");
  cf_bf.attach(cf);
  cf->callback([&] {
    rc = run_certify(cf_a, cf_b, cf_out, cf_bf, cf_no_direct, cf_no_theorem);
  });

  // verify
  std::string vf_cert, vf_start, vf_end;
  auto* vf = app.add_subcommand(
      "verify", "Replay a certificate against its start map");
  vf->add_option("certificate", vf_cert)->required();
  vf->add_option("start", vf_start, "Start map file")->required();
  vf->add_option("end", vf_end, "Optional end map to match");
  vf->callback([&] { rc = run_verify(vf_cert, vf_start, vf_end); });

  // enumerate
  std::string en_surface, en_out, en_format = "json";
  std::uint32_t en_v = 0;
  BudgetFlags en_bf;
  auto* en = app.add_subcommand(
      "enumerate", "All triangulation classes of a surface at fixed size");
  en->add_option("surface", en_surface,
                 "sphere | torus | klein | rp2 | genus2")
      ->required();
  en->add_option("v", en_v, "Vertex count")->required();
  en->add_option("-o,--out", en_out, "Output file (default stdout)");
  en->add_option("--format", en_format)
      ->check(CLI::IsMember({"json", "dot"}));
  en_bf.attach(en);
  en->callback(
      [&] { rc = run_enumerate(en_surface, en_v, en_out, en_format, en_bf); });

  // reduce
  std::string rd_path, rd_out, rd_script;
  auto* rd = app.add_subcommand(
      "reduce", "Contract a regular map down to an irreducible one");
  rd->add_option("path", rd_path)->required();
  rd->add_option("-o,--out", rd_out, "Irreducible map file (default stdout)");
  rd->add_option("--script", rd_script, "Also write the contraction script");
  rd->callback([&] { rc = run_reduce(rd_path, rd_out, rd_script); });

  // thresholds
  std::string th_surface;
  std::optional<int> th_chi;
  std::optional<std::uint32_t> th_v;
  auto* th = app.add_subcommand(
      "thresholds", "Size thresholds for a surface or Euler characteristic");
  auto* th_s = th->add_option("surface", th_surface);
  auto* th_c = th->add_option("--chi", th_chi, "Euler characteristic");
  th->add_option("--v", th_v, "Also print the tower height for this size");
  th_s->excludes(th_c);
  th->callback([&] {
    if (th_surface.empty() && !th_chi)
      raise(Errc::BadFormat, "need a surface name or --chi");
    rc = run_thresholds(th_surface, th_chi, th_v);
  });

  // export-dot
  std::vector<std::string> xd_paths;
  std::string xd_out, xd_mode = "regular";
  BudgetFlags xd_bf;
  auto* xd = app.add_subcommand(
      "export-dot", "Explore from root maps and export the flip graph");
  xd->add_option("roots", xd_paths, "Root map files")->required();
  xd->add_option("-o,--out", xd_out, "DOT file (default stdout)");
  xd->add_option("--mode", xd_mode, "Flip set")
      ->check(CLI::IsMember({"regular", "all"}));
  xd_bf.attach(xd);
  xd->callback([&] { rc = run_export_dot(xd_paths, xd_out, xd_mode, xd_bf); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const flipkit::Error& e) {
    std::fprintf(stderr, "flipkit: %s\n", e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "flipkit: %s\n", e.what());
    return 1;
  }
  return rc;
}
