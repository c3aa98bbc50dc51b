#include "pcinv/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <iomanip>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "pcinv/catalog.hpp"
#include "pcinv/parallel.hpp"
#include "pcinv/report.hpp"
#include "pcinv/verify/acceptance.hpp"

namespace pcinv {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return s.str();
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

struct Context {
  bool json = false;
  std::vector<std::string> catalog_paths;
  std::vector<Catalog> extra;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  void load() {
    for (const auto& p : catalog_paths) extra.push_back(load_catalog_file(p));
  }

  // Shipped catalog first, then --catalog files; "path:name" reads one file.
  PcGroupPtr resolve(const std::string& ref) const {
    auto colon = ref.rfind(':');
    if (colon != std::string::npos) {
      Catalog c = load_catalog_file(ref.substr(0, colon));
      std::string name = ref.substr(colon + 1);
      if (!c.contains(name)) throw UsageError("unknown group '" + name + "' in " + ref.substr(0, colon));
      return c.get(name);
    }
    if (shipped_catalog().contains(ref)) return shipped_catalog().get(ref);
    for (const auto& c : extra)
      if (c.contains(ref)) return c.get(ref);
    throw UsageError("unknown group '" + ref + "'");
  }

  Catalog known() const {
    Catalog c = shipped_catalog();
    for (const auto& x : extra) c.merge(x);
    return c;
  }
};

Element parse_word(const PcGroup& g, const std::string& text) {
  try {
    return parse_element(g, text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad element '" + text + "' for " + g.name() + ": " + e.what());
  }
}

F2Poly parse_quadratic(const std::string& text, int nvars, const char* what) {
  F2Poly f;
  try {
    f = F2Poly::parse(text, nvars);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad ") + what + " '" + text + "': " + e.what());
  }
  if (!f.is_zero() && (f.degree() != 2 || !f.is_homogeneous()))
    throw UsageError(std::string(what) + " must be homogeneous of degree two");
  return f;
}

void print_text(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    out << pad << it.key() << ":";
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      if (s.find('\n') == std::string::npos)
        out << " " << s << "\n";
      else
        out << "\n" << s << (s.back() == '\n' ? "" : "\n");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << "\n";
      for (const auto& x : v) out << pad << "  - " << x.dump() << "\n";
    } else if (v.is_object()) {
      out << "\n";
      print_text(out, v, indent + 2);
    } else {
      out << " " << v.dump() << "\n";
    }
  }
}

void emit(const Context& ctx, const std::string& invariant, const std::vector<PcGroupPtr>& groups,
          const std::string& options, const Payload& p, Clock::time_point t0) {
  std::string input = std::string("pcinv\n") + invariant + "\n" + options + "\n";
  Json names = Json::array();
  for (const auto& g : groups) {
    input += serialize(*g);
    names.push_back(g->name());
  }
  double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (ctx.json) {
    Json j;
    j["tool"] = "pcinv";
    j["version"] = kToolVersion;
    j["invariant"] = invariant;
    j["groups"] = names;
    j["input_digest"] = sha256_hex(input);
    j["value"] = p.value;
    j["certificate"] = p.certificate;
    j["timing"] = {{"seconds", seconds}};
    *ctx.out << j.dump(2) << "\n";
    return;
  }
  std::ostream& out = *ctx.out;
  out << invariant;
  for (const auto& n : names) out << " " << n.get<std::string>();
  out << "\n";
  print_text(out, p.value, 2);
  if (!p.certificate.empty()) {
    out << "certificate:\n";
    print_text(out, p.certificate, 2);
  }
  out << std::fixed << std::setprecision(3) << "time: " << seconds << " s\n";
}

CentralExtensionData build_extension(const PcGroupPtr& pi, const PcGroupPtr& cover,
                                     const std::string& images_opt, const std::string& sigma_opt) {
  std::vector<std::string> words;
  if (!images_opt.empty()) {
    std::stringstream s(images_opt);
    for (std::string w; std::getline(s, w, ',');) words.push_back(w);
  } else {
    const TowerSpec* t = find_tower(cover->name());
    if (!t || t->cover != cover->name() || t->base != pi->name())
      throw UsageError("no shipped map " + cover->name() + " -> " + pi->name() + "; pass --images");
    words = t->images;
  }
  if (static_cast<int>(words.size()) != cover->ngens())
    throw UsageError("--images needs one word per generator of " + cover->name());
  std::vector<Element> images;
  for (const auto& w : words) images.push_back(parse_word(*pi, w));
  CentralExtensionData e = make_central_extension(cover, pi, images);
  if (!sigma_opt.empty() && parse_word(*cover, sigma_opt) != e.t)
    throw PreconditionError("kernel of the map is generated by " + cover->to_string(e.t) + ", not " + sigma_opt);
  return e;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  unsigned threads = 0;
  std::string group, cover_ref, sigma, theta, z, images;
  bool page4 = false, mutate = false;

  CLI::App app{"Invariants of finite 2-groups given by pc presentations", "pcinv"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", ctx.json, "JSON report on standard output");
  app.add_option("--catalog", ctx.catalog_paths, "extra catalog file (repeatable)")->allow_extra_args(false);
  app.add_option("--threads", threads, "worker threads for scans (default: all cores)");

  auto group_cmd = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_option("group", group, "catalog name or file:name")->required();
    return s;
  };
  group_cmd("info", "presentation summary");
  group_cmd("h1whp", "rank of H1(Wh')");
  group_cmd("sk1", "SK1 of the 2-adic group ring");
  group_cmd("cover", "Schur cover");
  CLI::App* search = group_cmd("search-ext", "central extensions with nonzero SK1 on the quotient");
  search->add_option("--sigma", sigma, "check one kernel generator instead of searching");
  CLI::App* lhs = group_cmd("lhs-report", "d2 and d3 tables");
  lhs->add_flag("--page4", page4, "list page-4 survival of sums of fourth powers");
  lhs->add_flag("--mutate-d2", mutate)->group("");
  group_cmd("lambda4", "lambda4 detector");
  group_cmd("conj62", "cyclic quotient class-count scan");
  CLI::App* compat = app.add_subcommand("compat", "compatible pair check");
  compat->add_option("pi", group, "base group")->required();
  compat->add_option("cover", cover_ref, "cover group")->required();
  compat->add_option("--theta", theta, "extension class, degree-two polynomial")->required();
  compat->add_option("--z", z, "degree-two polynomial")->required();
  compat->add_option("--sigma", sigma, "expected kernel generator of the cover map");
  compat->add_option("--images", images, "images of the cover generators in pi, comma separated");
  CLI::App* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_flag("--mutate-d2", mutate)->group("");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  set_thread_count(threads);
  const std::string cmd = app.get_subcommands().front()->get_name();
  auto t0 = Clock::now();

  try {
    if (cmd == "selftest") {
      verify::AcceptanceOptions o;
      o.mutate_d2 = mutate;
      o.catalog_files = ctx.catalog_paths;
      o.progress = &err;
      verify::AcceptanceResult r = verify::run_acceptance(o);
      if (ctx.json) {
        Json j = Json::array();
        for (const auto& c : r.criteria)
          j.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
        Payload p;
        p.value["pass"] = r.all_pass();
        p.value["catalog"] = r.catalog_ok ? "ok" : r.catalog_detail;
        p.value["criteria"] = j;
        emit(ctx, cmd, {}, mutate ? "mutate-d2" : "", p, t0);
      } else {
        verify::print(out, r);
      }
      return r.all_pass() ? 0 : 1;
    }

    ctx.load();
    PcGroupPtr g = ctx.resolve(group);
    Payload p;
    std::string opts;
    std::vector<PcGroupPtr> inputs{g};
    if (cmd == "info") {
      p = info_payload(g);
    } else if (cmd == "h1whp") {
      p = h1whp_payload(*g, h1_wh_prime(g));
    } else if (cmd == "sk1") {
      p = sk1_payload(sk1(g));
    } else if (cmd == "cover") {
      p = cover_payload(schur_cover(g));
    } else if (cmd == "search-ext") {
      if (!sigma.empty()) {
        opts = "sigma=" + sigma;
        p = extension_payload(make_central_extension(g, parse_word(*g, sigma)), ctx.known());
      } else {
        err << "searching central extensions of " << g->name() << "\n";
        p = search_payload(*g, search_central_extensions(g), ctx.known());
      }
    } else if (cmd == "lhs-report") {
      LhsOptions lo;
      lo.mutate_d2 = mutate;
      opts = std::string(page4 ? "page4" : "") + (mutate ? " mutate-d2" : "");
      p = lhs_payload(lhs_data(g, lo), page4);
    } else if (cmd == "lambda4") {
      p = lambda4_payload(*g, lambda4_detect(g));
    } else if (cmd == "conj62") {
      err << "scanning cyclic quotients of " << g->name() << "\n";
      p = conj62_payload(*g, conjecture62_scan(g));
    } else if (cmd == "compat") {
      PcGroupPtr c = ctx.resolve(cover_ref);
      inputs.push_back(c);
      CentralExtensionData e = build_extension(g, c, images, sigma);
      int r = lhs_data(g).r();
      F2Poly th = parse_quadratic(theta, r, "--theta");
      F2Poly zz = parse_quadratic(z, r, "--z");
      opts = "theta=" + th.to_string() + " z=" + zz.to_string() + " images=" + images;
      p = compat_payload(compatible_pair_check(g, e, th, zz));
    }
    emit(ctx, cmd, inputs, opts, p, t0);
    return 0;
  } catch (const UsageError& e) {
    err << "pcinv: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "pcinv: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pcinv
