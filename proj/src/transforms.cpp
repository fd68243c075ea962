#include "supertree/transforms.hpp"

#include <cassert>

#include "supertree/constructions.hpp"

namespace supertree {

std::vector<long long> child_profile(const DaryTree& t) {
  std::vector<long long> f(t.d + 1, 0);
  for (int v = 0; v < t.size(); ++v) f[chi(t, v).size()]++;
  return f;
}

std::vector<long long> child_profile(const BracketTree& t) {
  std::vector<long long> f(t.d + 1, 0);
  for (int v = 0; v < t.size(); ++v) f[t.degree(v)]++;
  return f;
}

std::vector<VertexRef> j_gadget_leaf_refs(int d, const std::vector<int>& tvec) {
  (void)d;
  const int m = static_cast<int>(tvec.size());
  std::vector<VertexRef> refs;
  if (m == 1) {
    refs.push_back({tvec[0]});
    return refs;
  }
  VertexRef first(m - 2, 1);
  first.push_back(tvec[0]);
  refs.push_back(first);
  for (int i = 2; i <= m; ++i) {
    VertexRef r(m - i, 1);
    r.push_back(tvec[i - 1]);
    refs.push_back(r);
  }
  return refs;
}

namespace {

DaryTree substitute_rec(const DaryTree& t, int v) {
  std::vector<int> types = chi(t, v);
  std::vector<DaryTree> subs;
  subs.reserve(types.size());
  for (int ty : types) subs.push_back(substitute_rec(t, t.child(v, ty)));

  if (types.size() <= 2) {
    DaryTree out = dary_single(t.d);
    for (std::size_t i = 0; i < types.size(); ++i) {
      out = attach_merge(out, {}, path_dary(t.d, {types[i]}));
      out = glue(out, {types[i]}, subs[i]);
    }
    return out;
  }
  // v becomes the root of a J-gadget copy; subtrees hang off its leaves
  DaryTree out = j_gadget(t.d, types);
  auto leaves = j_gadget_leaf_refs(t.d, types);
  for (std::size_t i = 0; i < types.size(); ++i) out = glue(out, leaves[i], subs[i]);
  return out;
}

DaryTree to_binary_rec(const DaryTree& t, int v) {
  std::vector<int> types = chi(t, v);
  assert(types.size() <= 2);
  DaryTree out = dary_single(2);
  if (types.size() == 1) {
    int slot = types[0] == 1 ? 1 : 2;
    out = attach_merge(out, {}, path_dary(2, {slot}));
    out = glue(out, {slot}, to_binary_rec(t, t.child(v, types[0])));
  } else if (types.size() == 2) {
    out = attach_merge(out, {}, path_dary(2, {1}));
    out = glue(out, {1}, to_binary_rec(t, t.child(v, types[0])));
    out = attach_merge(out, {}, path_dary(2, {2}));
    out = glue(out, {2}, to_binary_rec(t, t.child(v, types[1])));
  }
  return out;
}

}  // namespace

DaryTree gadget_substitute(const DaryTree& t) { return substitute_rec(t, 0); }

DaryTree binarize(const DaryTree& t) {
  if (t.d < 3) throw std::invalid_argument("binarize applies to arity >= 3");
  DaryTree reduced = gadget_substitute(t);
  DaryTree out = to_binary_rec(reduced, 0);
  auto f = child_profile(t);
  long long expected = 2 * f[0] + f[1] - 1;
  if (out.size() != expected)
    throw std::logic_error("binarize: size " + std::to_string(out.size()) + " != 2*f0+f1-1 = " +
                           std::to_string(expected));
  return out;
}

DaryTree expand(const BracketTree& t) {
  const int d = t.d;
  DaryTree out;
  out.d = d;
  out.slots.assign(d, -1);

  struct Walk {
    const BracketTree& src;
    DaryTree& dst;
    void run(int sv, int dv) {
      for (int pos = 1; pos <= src.degree(sv); ++pos) {
        // edge path: type pos on top, then 1..d skipping pos
        int cur = dv;
        cur = attach(cur, pos);
        for (int ty = 1; ty <= dst.d; ++ty)
          if (ty != pos) cur = attach(cur, ty);
        run(src.kids[sv][pos - 1], cur);
      }
    }
    int attach(int v, int ty) {
      int id = dst.size();
      dst.slots.insert(dst.slots.end(), dst.d, -1);
      dst.slots[static_cast<std::size_t>(v) * dst.d + ty - 1] = id;
      return id;
    }
  } walk{t, out};
  walk.run(0, 0);

  assert(out.size() == d * (t.size() - 1) + 1);
  return out;
}

}  // namespace supertree
