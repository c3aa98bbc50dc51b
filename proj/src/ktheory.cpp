#include "pcinv/ktheory.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "pcinv/abelian.hpp"
#include "pcinv/parallel.hpp"

namespace pcinv {

std::optional<Element> inverse_conjugator(const PcGroup& g, Element x, bool derived_central) {
  const Element target = g.inv(x);
  if (derived_central) {
    // h -> [x, h] is a homomorphism into the centre, so search its image
    // for x^-2 while tracking a preimage.
    const Element want = g.mul(g.inv(x), target);  // x^-2
    std::vector<Element> comms;
    for (Element y : g.generators()) comms.push_back(g.comm(x, y));
    std::unordered_map<std::uint32_t, Element> pre{{0U, g.identity()}};
    std::vector<Element> queue{g.identity()};
    for (std::size_t p = 0; p < queue.size(); ++p) {
      Element v = queue[p];
      Element h = pre.at(v.bits);
      if (v == want) return h;
      for (std::size_t i = 0; i < comms.size(); ++i) {
        Element nv = g.mul(v, comms[i]);
        if (!pre.count(nv.bits)) {
          pre[nv.bits] = g.mul(h, g.gen(static_cast<int>(i)));
          queue.push_back(nv);
        }
      }
    }
    return std::nullopt;
  }
  std::unordered_map<std::uint32_t, Element> by{{x.bits, g.identity()}};
  std::vector<Element> queue{x};
  for (std::size_t p = 0; p < queue.size(); ++p) {
    Element y = queue[p];
    Element w = by.at(y.bits);
    if (y == target) return w;
    for (Element s : g.generators()) {
      Element z = g.conj(y, s);
      if (!by.count(z.bits)) {
        by[z.bits] = g.mul(w, s);
        queue.push_back(z);
      }
    }
  }
  return std::nullopt;
}

WhPrimeData h1_wh_prime(const PcGroupPtr& gp) {
  const PcGroup& g = *gp;
  WhPrimeData d;
  d.derived = derived_subgroup(g);
  d.class2_path = is_central(g, d.derived);
  std::vector<Element> s;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Element x = g.element(i);
    if (d.derived.contains(g, g.mul(x, x))) s.push_back(x);
  }
  d.S = subgroup_from_elements(g, s);
  std::vector<Element> cgens = d.derived.generators;
  d.C = closure(g, cgens);
  for (Element x : d.S.elements) {
    if (d.C.contains(g, x)) continue;
    if (auto w = inverse_conjugator(g, x, d.class2_path)) {
      d.witnesses.push_back({x, *w});
      cgens.push_back(x);
      d.C = closure(g, cgens);
    }
  }
  d.rank = log2_exact(d.S.order() / d.C.order());
  return d;
}

std::size_t SK1Data::order() const {
  std::size_t o = 1;
  for (auto v : invariants) o *= static_cast<std::size_t>(v);
  return o;
}

bool SK1Data::is_wedge(Element e) const {
  if (!cover->stem.contains(*cover->sc, e)) throw std::invalid_argument("element is not in the stem part");
  return wedges.contains(*cover->sc, e);
}

SK1Data sk1(std::shared_ptr<const CoverData> cover) {
  SK1Data d;
  d.cover = std::move(cover);
  d.stem_order = d.cover->stem.order();
  d.wedges = commuting_wedges(*d.cover);
  for (int a : section_invariants(*d.cover->sc, d.cover->stem, d.wedges)) d.invariants.push_back(std::int64_t{1} << a);
  d.stem_generators = d.cover->stem.generators;
  return d;
}

SK1Data sk1(const PcGroupPtr& g) { return sk1(std::make_shared<const CoverData>(schur_cover(g))); }

CentralExtensionData make_central_extension(const PcGroupPtr& cover, Element t) {
  const PcGroup& g = *cover;
  if (t == g.identity() || g.mul(t, t) != g.identity()) throw std::invalid_argument("sigma generator must have order 2");
  if (!commutes_with_generators(g, t)) throw std::invalid_argument("sigma generator is not central");
  CentralExtensionData e;
  e.cover = cover;
  e.t = t;
  e.sigma = closure(g, {t});
  e.quotient = std::make_shared<const QuotientGroup>(cover, e.sigma);
  e.sigma_in_derived = derived_subgroup(g).contains(g, t);
  return e;
}

CentralExtensionData make_central_extension(const PcGroupPtr& cover, const PcGroupPtr& base,
                                            std::vector<Element> images) {
  auto alpha = std::make_shared<const GroupHom<PcGroup>>(cover, base, std::move(images));
  if (!alpha->is_surjective()) throw std::invalid_argument("extension map is not surjective");
  Subgroup k = alpha->kernel();
  if (k.order() != 2) throw std::invalid_argument("extension kernel does not have order 2");
  CentralExtensionData e = make_central_extension(cover, k.elements[1]);
  e.base = base;
  e.alpha = std::move(alpha);
  return e;
}

Thm41Result thm41_check(const CentralExtensionData& e) {
  const PcGroup& g = *e.cover;
  Thm41Result r;
  r.sigma_in_derived = e.sigma_in_derived;
  std::atomic<bool> found{false};
  std::mutex mu;
  parallel_chunks(g.order(), [&](std::size_t b, std::size_t end, unsigned) {
    for (std::size_t i = b; i < end && !found; ++i) {
      Element a = g.element(i);
      Element ai = g.inv(a);
      for (std::size_t j = i + 1; j < g.order(); ++j) {
        Element c = g.element(j);
        if (g.mul(g.mul(ai, g.inv(c)), g.mul(a, c)) == e.t) {
          std::lock_guard lk(mu);
          if (!r.commutator_witness) r.commutator_witness = std::make_pair(a, c);
          found = true;
          break;
        }
      }
    }
  });
  r.holds = r.sigma_in_derived && !r.commutator_witness;
  return r;
}

Thm42Result thm42_check(const CentralExtensionData& e) {
  const PcGroup& g = *e.cover;
  ClassData cls = conjugacy_classes(g);
  auto same = [&](Element a, Element b) { return cls.class_of[a.bits] == cls.class_of[b.bits]; };
  Thm42Result r;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Element h = g.element(i);
    Element ht = g.mul(h, e.t);
    if (ht.bits < h.bits) continue;  // one lift per coset
    Element hi = g.inv(h);
    Element hit = g.mul(hi, e.t);
    bool self_inverse_below = same(h, hi) || same(h, hit);
    if (!self_inverse_below) continue;
    ++r.self_inverse_classes_checked;
    bool lifts = same(h, hi) || same(ht, hit);
    if (!lifts && !r.counterexample) r.counterexample = h;
  }
  r.holds = !r.counterexample;
  return r;
}

std::vector<ExtensionCandidate> search_central_extensions(const PcGroupPtr& gp) {
  const PcGroup& g = *gp;
  auto st = standard_subgroups(g);
  std::vector<ExtensionCandidate> out;
  if (st.center_derived.order() == 1) return out;

  std::vector<bool> is_comm(g.order(), false);
  std::mutex mu;
  parallel_chunks(g.order(), [&](std::size_t b, std::size_t end, unsigned) {
    std::vector<bool> local(g.order(), false);
    for (std::size_t i = b; i < end; ++i)
      for (std::size_t j = i + 1; j < g.order(); ++j) local[g.comm(g.element(i), g.element(j)).bits] = true;
    std::lock_guard lk(mu);
    for (std::size_t v = 0; v < local.size(); ++v)
      if (local[v]) is_comm[v] = true;
  });

  for (Element t : st.center_derived.elements) {
    if (t == g.identity() || g.mul(t, t) != g.identity() || is_comm[t.bits]) continue;
    CentralExtensionData ext = make_central_extension(gp, t);
    Fingerprint fp = fingerprint(*ext.quotient);
    bool dup = false;
    for (auto& c : out)
      if (c.quotient_fingerprint == fp) {
        c.same_fingerprint.push_back(t);
        dup = true;
        break;
      }
    if (dup) continue;
    ExtensionCandidate c;
    c.t = t;
    c.quotient_fingerprint = std::move(fp);
    c.thm42 = thm42_check(ext).holds;
    c.extension = std::move(ext);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace pcinv
