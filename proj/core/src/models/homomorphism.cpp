#include "isolab/models/homomorphism.hpp"

#include <sstream>

#include "isolab/error.hpp"

namespace isolab::models {

using phl::index;
using phl::OpId;
using phl::SortId;

std::string_view to_string(HomClass c) {
  switch (c) {
    case HomClass::NotHom: return "not_hom";
    case HomClass::Hom: return "hom";
    case HomClass::HomReflecting: return "hom_reflecting";
    case HomClass::Iso: return "iso";
  }
  return "?";
}

namespace {

void check_shape(const Homomorphism& h) {
  if (!h.source || !h.target) throw Error("homomorphism without endpoints");
  const phl::Signature& sig = h.source->signature();
  if (!(sig == h.target->signature())) {
    throw Error("homomorphism endpoints have different signatures");
  }
  if (h.maps.size() != sig.sort_count()) {
    throw Error("homomorphism needs one map per sort");
  }
  for (std::size_t s = 0; s < sig.sort_count(); ++s) {
    const SortId sid{static_cast<std::uint32_t>(s)};
    if (h.maps[s].size() != h.source->carrier_size(sid)) {
      throw Error("map for sort '" + sig.sort(sid).name + "' is not total");
    }
    for (Elem e : h.maps[s]) {
      if (e < 0 || static_cast<std::size_t>(e) >= h.target->carrier_size(sid)) {
        throw Error("map for sort '" + sig.sort(sid).name +
                    "' leaves the target carrier");
      }
    }
  }
}

std::string describe(const PartialStructure& m, OpId f,
                     std::span<const Elem> args) {
  const phl::OpSymbol& op = m.signature().op(f);
  std::ostringstream os;
  os << op.name << '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) os << ", ";
    os << m.element_id(op.arg_sorts[i], args[i]);
  }
  os << ')';
  return os.str();
}

// Visits every argument tuple of f over carriers of m.
template <typename Fn>
bool all_tuples(const PartialStructure& m, const phl::OpSymbol& op, Fn&& fn) {
  std::vector<Elem> args(op.arity(), 0);
  for (SortId s : op.arg_sorts) {
    if (m.carrier_size(s) == 0) return true;
  }
  while (true) {
    if (!fn(std::span<const Elem>(args))) return false;
    std::size_t i = args.size();
    while (true) {
      if (i == 0) return true;
      --i;
      if (static_cast<std::size_t>(++args[i]) < m.carrier_size(op.arg_sorts[i])) {
        break;
      }
      args[i] = 0;
    }
  }
}

}  // namespace

HomReport check_homomorphism(const Homomorphism& h) {
  check_shape(h);
  const PartialStructure& src = *h.source;
  const PartialStructure& tgt = *h.target;
  const phl::Signature& sig = src.signature();
  HomReport report;

  report.bijective = true;
  for (std::size_t s = 0; s < sig.sort_count(); ++s) {
    const SortId sid{static_cast<std::uint32_t>(s)};
    if (src.carrier_size(sid) != tgt.carrier_size(sid)) {
      report.bijective = false;
      break;
    }
    std::vector<bool> hit(tgt.carrier_size(sid), false);
    for (Elem e : h.maps[s]) {
      if (hit[static_cast<std::size_t>(e)]) report.bijective = false;
      hit[static_cast<std::size_t>(e)] = true;
    }
  }

  // Preservation: a ∈ dom(f^M) ⇒ h(a) ∈ dom(f^N) and h(f(a)) = f(h(a)).
  // Reflection: h(a) ∈ dom(f^N) ⇒ a ∈ dom(f^M).
  std::string reflect_witness;
  std::vector<Elem> image;
  for (std::size_t f = 0; f < sig.op_count(); ++f) {
    const OpId fid{static_cast<std::uint32_t>(f)};
    const phl::OpSymbol& op = sig.op(fid);
    const bool preserved = all_tuples(src, op, [&](std::span<const Elem> args) {
      image.assign(args.size(), 0);
      for (std::size_t i = 0; i < args.size(); ++i) {
        image[i] = h(op.arg_sorts[i], args[i]);
      }
      const Elem here = src.apply(fid, args);
      const Elem there = tgt.apply(fid, image);
      if (here != kUndefined) {
        if (there == kUndefined) {
          report.witness = describe(src, fid, args) +
                           " is defined but its image " +
                           describe(tgt, fid, image) + " is not";
          return false;
        }
        if (h(op.result_sort, here) != there) {
          report.witness = "h(" + describe(src, fid, args) + ") = " +
                           tgt.element_id(op.result_sort,
                                          h(op.result_sort, here)) +
                           " but " + describe(tgt, fid, image) + " = " +
                           tgt.element_id(op.result_sort, there);
          return false;
        }
      } else if (there != kUndefined && reflect_witness.empty()) {
        reflect_witness = describe(tgt, fid, image) + " is defined but " +
                          describe(src, fid, args) + " is not";
      }
      return true;
    });
    if (!preserved) {
      report.cls = HomClass::NotHom;
      return report;
    }
  }
  if (!reflect_witness.empty()) {
    report.cls = HomClass::Hom;
    report.witness = std::move(reflect_witness);
    return report;
  }
  report.cls = report.bijective ? HomClass::Iso : HomClass::HomReflecting;
  return report;
}

Homomorphism identity(std::shared_ptr<const PartialStructure> m) {
  Homomorphism h{m, m, {}};
  for (std::size_t s = 0; s < m->signature().sort_count(); ++s) {
    const std::size_t n = m->carrier_size(SortId{static_cast<std::uint32_t>(s)});
    std::vector<Elem> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Elem>(i);
    h.maps.push_back(std::move(id));
  }
  return h;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& h) {
  if (h.target != g.source && !(*h.target == *g.source)) {
    throw Error("compose: target of the first map is not the source of the second");
  }
  Homomorphism out{h.source, g.target, h.maps};
  for (std::size_t s = 0; s < out.maps.size(); ++s) {
    for (Elem& e : out.maps[s]) e = g.maps[s][static_cast<std::size_t>(e)];
  }
  return out;
}

std::optional<Homomorphism> inverse_function(const Homomorphism& h) {
  Homomorphism inv{h.target, h.source, {}};
  for (std::size_t s = 0; s < h.maps.size(); ++s) {
    const SortId sid{static_cast<std::uint32_t>(s)};
    std::vector<Elem> back(h.target->carrier_size(sid), kUndefined);
    if (back.size() != h.maps[s].size()) return std::nullopt;
    for (std::size_t i = 0; i < h.maps[s].size(); ++i) {
      Elem& slot = back[static_cast<std::size_t>(h.maps[s][i])];
      if (slot != kUndefined) return std::nullopt;
      slot = static_cast<Elem>(i);
    }
    inv.maps.push_back(std::move(back));
  }
  return inv;
}

}  // namespace isolab::models
