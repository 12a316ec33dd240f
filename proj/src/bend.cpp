#include "kaa/diagram.hpp"

#include <algorithm>
#include <set>

namespace kaa {

namespace {

void reject_red(const Interface &i) {
  if (std::find(i.begin(), i.end(), Obj::Red) != i.end())
    throw BoundaryError("red object on the boundary: " + interface_str(i));
}

std::size_t count(const Interface &i, Obj o) {
  return static_cast<std::size_t>(std::count(i.begin(), i.end(), o));
}

Endpoint boundary(std::size_t k) { return {Endpoint::kBoundary, k}; }

// Drops the listed nodes (which must be wire-free by now) and renumbers.
void erase_nodes(PortGraph &g, const std::set<std::size_t> &dead) {
  std::vector<std::size_t> remap(g.nodes.size(), SIZE_MAX);
  std::vector<Label> kept;
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (!dead.count(n)) {
      remap[n] = kept.size();
      kept.push_back(g.nodes[n]);
    }
  g.nodes = std::move(kept);
  for (auto &w : g.wires) {
    if (!w.src.boundary())
      w.src.node = remap[w.src.node];
    if (!w.dst.boundary())
      w.dst.node = remap[w.dst.node];
  }
}

bool reaches(const PortGraph &g, std::size_t from, std::size_t to) {
  std::vector<bool> seen(g.nodes.size(), false);
  std::vector<std::size_t> stack{from};
  while (!stack.empty()) {
    auto n = stack.back();
    stack.pop_back();
    if (n == to)
      return true;
    if (seen[n])
      continue;
    seen[n] = true;
    for (const auto &w : g.wires)
      if (!w.src.boundary() && w.src.node == n && !w.dst.boundary())
        stack.push_back(w.dst.node);
  }
  return false;
}

} // namespace

Term bend_to_left_to_right(const Term &t) {
  auto [dom, cod] = typecheck(t);
  reject_red(dom);
  reject_red(cod);
  if (is_left_to_right(t))
    return t;

  PortGraph g = to_port_graph(t);
  const std::size_t a = count(dom, Obj::Right), c = count(cod, Obj::Right);
  PortGraph h;
  h.nodes = g.nodes;
  h.dom.assign(a + count(cod, Obj::Left), Obj::Right);
  h.cod.assign(c + count(dom, Obj::Left), Obj::Right);

  // Position of each old boundary slot among its own colour.
  auto ranks = [](const Interface &i) {
    std::vector<std::size_t> r(i.size());
    std::size_t right = 0, left = 0;
    for (std::size_t k = 0; k < i.size(); ++k)
      r[k] = i[k] == Obj::Right ? right++ : left++;
    return r;
  };
  const auto dom_rank = ranks(dom), cod_rank = ranks(cod);

  std::vector<std::size_t> cup_of(dom.size(), SIZE_MAX), cap_of(cod.size(), SIZE_MAX);
  for (std::size_t k = 0; k < dom.size(); ++k)
    if (dom[k] == Obj::Left) {
      cup_of[k] = h.nodes.size();
      h.nodes.push_back(Label{Gen::Cup});
    }
  for (std::size_t k = 0; k < cod.size(); ++k)
    if (cod[k] == Obj::Left) {
      cap_of[k] = h.nodes.size();
      h.nodes.push_back(Label{Gen::Cap});
    }

  for (auto w : g.wires) {
    if (w.src.boundary()) {
      std::size_t k = w.src.port;
      w.src = dom[k] == Obj::Right ? boundary(dom_rank[k]) : Endpoint{cup_of[k], 1};
    }
    if (w.dst.boundary()) {
      std::size_t k = w.dst.port;
      w.dst = cod[k] == Obj::Right ? boundary(cod_rank[k]) : Endpoint{cap_of[k], 0};
    }
    h.wires.push_back(w);
  }
  for (std::size_t k = 0; k < dom.size(); ++k)
    if (dom[k] == Obj::Left)
      h.wires.push_back({{cup_of[k], 0}, boundary(c + dom_rank[k]), Obj::Right});
  for (std::size_t k = 0; k < cod.size(); ++k)
    if (cod[k] == Obj::Left)
      h.wires.push_back({boundary(a + cod_rank[k]), {cap_of[k], 1}, Obj::Right});
  return to_term(h);
}

Term unbend(const Term &bent, const Interface &dom, const Interface &cod) {
  reject_red(dom);
  reject_red(cod);
  auto [bdom, bcod] = typecheck(bent);
  const std::size_t a = count(dom, Obj::Right), b = count(cod, Obj::Left);
  const std::size_t c = count(cod, Obj::Right), d = count(dom, Obj::Left);
  if (bdom != Interface(a + b, Obj::Right) || bcod != Interface(c + d, Obj::Right))
    throw BoundaryError("bent diagram does not match " + interface_str(dom) +
                        " -> " + interface_str(cod));
  if (b == 0 && d == 0)
    return bent;

  PortGraph g = to_port_graph(bent);
  PortGraph h;
  h.nodes = g.nodes;
  h.dom = dom;
  h.cod = cod;

  // Old bent input index -> new dom position or cup; likewise for outputs.
  std::vector<Endpoint> in_map(a + b), out_map(c + d);
  std::size_t right = 0, left = 0;
  for (std::size_t k = 0; k < dom.size(); ++k) {
    if (dom[k] == Obj::Right) {
      in_map[right++] = boundary(k);
    } else {
      std::size_t cap = h.nodes.size();
      h.nodes.push_back(Label{Gen::Cap});
      h.wires.push_back({boundary(k), {cap, 0}, Obj::Left});
      out_map[c + left++] = {cap, 1};
    }
  }
  right = left = 0;
  for (std::size_t k = 0; k < cod.size(); ++k) {
    if (cod[k] == Obj::Right) {
      out_map[right++] = boundary(k);
    } else {
      std::size_t cup = h.nodes.size();
      h.nodes.push_back(Label{Gen::Cup});
      h.wires.push_back({{cup, 1}, boundary(k), Obj::Left});
      in_map[a + left++] = {cup, 0};
    }
  }
  for (auto w : g.wires) {
    if (w.src.boundary())
      w.src = in_map[w.src.port];
    if (w.dst.boundary())
      w.dst = out_map[w.dst.port];
    h.wires.push_back(w);
  }
  return to_term(h);
}

PortGraph yank_normalise(PortGraph g) {
  for (bool changed = true; changed;) {
    changed = false;
    const Incidence inc = g.incidence();
    for (std::size_t cup = 0; cup < g.nodes.size() && !changed; ++cup) {
      if (g.nodes[cup].gen != Gen::Cup)
        continue;
      const std::size_t w_right = inc.out[cup][0], w_left = inc.out[cup][1];
      const Wire r = g.wires[w_right], l = g.wires[w_left];
      const bool left_link = !l.dst.boundary() && g.nodes[l.dst.node].gen == Gen::Cap;
      const bool right_link = !r.dst.boundary() && g.nodes[r.dst.node].gen == Gen::Cap;

      if (left_link && right_link && l.dst.node == r.dst.node) {
        // Closed loop: drop both nodes and both wires.
        const std::size_t cap = l.dst.node;
        g.wires.erase(g.wires.begin() + std::max(w_right, w_left));
        g.wires.erase(g.wires.begin() + std::min(w_right, w_left));
        erase_nodes(g, {cup, cap});
        changed = true;
      } else if (left_link) {
        // cup.out1 -> cap.in0: straighten the right-going wire.
        const std::size_t cap = l.dst.node;
        const std::size_t w_in = inc.in[cap][1];
        const Endpoint from = g.wires[w_in].src, to = r.dst;
        if (!from.boundary() && !to.boundary() && reaches(g, to.node, from.node))
          continue;
        g.wires[w_right] = {from, to, Obj::Right};
        std::vector<std::size_t> gone{w_left, w_in};
        std::sort(gone.rbegin(), gone.rend());
        for (auto w : gone)
          g.wires.erase(g.wires.begin() + w);
        erase_nodes(g, {cup, cap});
        changed = true;
      } else if (right_link) {
        // cup.out0 -> cap.in1: straighten the left-going wire.
        const std::size_t cap = r.dst.node;
        const std::size_t w_in = inc.in[cap][0];
        const Endpoint from = g.wires[w_in].src, to = l.dst;
        if (!from.boundary() && !to.boundary() && reaches(g, to.node, from.node))
          continue;
        g.wires[w_left] = {from, to, Obj::Left};
        std::vector<std::size_t> gone{w_right, w_in};
        std::sort(gone.rbegin(), gone.rend());
        for (auto w : gone)
          g.wires.erase(g.wires.begin() + w);
        erase_nodes(g, {cup, cap});
        changed = true;
      }
    }
  }
  return g;
}

} // namespace kaa
