#include "kaa/diagram.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include <openssl/evp.h>

namespace kaa {

char obj_char(Obj o) {
  switch (o) {
  case Obj::Red:
    return 'R';
  case Obj::Right:
    return '>';
  case Obj::Left:
    return '<';
  }
  return '?';
}

Obj obj_from_char(char c) {
  switch (c) {
  case 'R':
    return Obj::Red;
  case '>':
    return Obj::Right;
  case '<':
    return Obj::Left;
  }
  throw std::invalid_argument(std::string("unknown object '") + c + "'");
}

std::string interface_str(const Interface &i) {
  if (i.empty())
    return "I";
  std::string s;
  for (auto o : i)
    s.push_back(obj_char(o));
  return s;
}

// ---- generators ---------------------------------------------------------------

namespace {

constexpr Obj R = Obj::Red, B = Obj::Right, L = Obj::Left;

struct Typing {
  Interface dom, cod;
  const char *name;
};

const std::array<Typing, 15> &typing_table() {
  static const std::array<Typing, 15> table{{
      {{R}, {R, R}, "rcopy"},
      {{R}, {}, "rdel"},
      {{R}, {R}, "star"},
      {{R, R}, {R}, "prod"},
      {{}, {R}, "rone"},
      {{R, R}, {R}, "rsum"},
      {{}, {R}, "rzero"},
      {{}, {R}, "atom"},
      {{R, B}, {B}, "act"},
      {{B}, {B, B}, "copy"},
      {{B}, {}, "del"},
      {{B, B}, {B}, "merge"},
      {{}, {B}, "unit"},
      {{L, B}, {}, "cap"},
      {{}, {B, L}, "cup"},
  }};
  return table;
}

} // namespace

const Interface &Label::dom() const {
  return typing_table()[static_cast<std::size_t>(gen)].dom;
}
const Interface &Label::cod() const {
  return typing_table()[static_cast<std::size_t>(gen)].cod;
}
std::string Label::name() const {
  std::string n = typing_table()[static_cast<std::size_t>(gen)].name;
  if (gen == Gen::Atom) {
    n += '[';
    n += letter;
    n += ']';
  }
  return n;
}

// ---- terms --------------------------------------------------------------------

Term Term::gen(Label l) {
  return Term(std::make_shared<const Node>(Node{Kind::Gen, l}));
}
Term Term::id(Interface i) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Id, Label{Gen::RedCopy}, std::move(i)}));
}
Term Term::sym(Obj a, Obj b) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Sym, Label{Gen::RedCopy}, Interface{a, b}}));
}
Term Term::seq(Term first, Term second) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Seq, Label{Gen::RedCopy}, {},
           std::make_shared<const Term>(std::move(first)),
           std::make_shared<const Term>(std::move(second))}));
}
Term Term::par(Term top, Term bottom) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Par, Label{Gen::RedCopy}, {},
           std::make_shared<const Term>(std::move(top)),
           std::make_shared<const Term>(std::move(bottom))}));
}

Term Term::seq_all(const std::vector<Term> &ts) {
  if (ts.empty())
    throw std::invalid_argument("seq_all: empty composite");
  Term acc = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i)
    acc = seq(acc, ts[i]);
  return acc;
}

Term Term::par_all(const std::vector<Term> &ts) {
  if (ts.empty())
    return id(Interface{});
  Term acc = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i)
    acc = par(acc, ts[i]);
  return acc;
}

std::size_t Term::size() const {
  switch (kind()) {
  case Kind::Gen:
    return 1;
  case Kind::Seq:
  case Kind::Par:
    return first().size() + second().size();
  default:
    return 0;
  }
}

namespace {

struct PathStep {
  const PathStep *parent;
  const char *kind;
  int index;
};

std::string path_str(const PathStep *p) {
  std::string out;
  for (; p; p = p->parent)
    out = std::string(p->kind) + "." + std::to_string(p->index) + (out.empty() ? "" : "/" + out);
  return out;
}

std::pair<Interface, Interface> check(const Term &t, const PathStep *path) {
  switch (t.kind()) {
  case Term::Kind::Gen:
    return {t.label().dom(), t.label().cod()};
  case Term::Kind::Id:
    return {t.objects(), t.objects()};
  case Term::Kind::Sym:
    return {t.objects(), {t.objects()[1], t.objects()[0]}};
  case Term::Kind::Seq: {
    const PathStep p0{path, "seq", 0}, p1{path, "seq", 1};
    auto [d1, c1] = check(t.first(), &p0);
    auto [d2, c2] = check(t.second(), &p1);
    if (c1 != d2)
      throw TypeError("composition mismatch: " + interface_str(c1) +
                          " does not match " + interface_str(d2),
                      path_str(path));
    return {std::move(d1), std::move(c2)};
  }
  case Term::Kind::Par: {
    const PathStep p0{path, "par", 0}, p1{path, "par", 1};
    auto [d1, c1] = check(t.first(), &p0);
    auto [d2, c2] = check(t.second(), &p1);
    d1.insert(d1.end(), d2.begin(), d2.end());
    c1.insert(c1.end(), c2.begin(), c2.end());
    return {std::move(d1), std::move(c1)};
  }
  }
  throw std::logic_error("typecheck: unknown term kind");
}

} // namespace

std::pair<Interface, Interface> typecheck(const Term &t) { return check(t, nullptr); }

Term with_ids(const Interface &before, const Term &t, const Interface &after) {
  Term out = t;
  if (!before.empty())
    out = Term::par(Term::id(before), out);
  if (!after.empty())
    out = Term::par(out, Term::id(after));
  return out;
}

// ---- port graphs --------------------------------------------------------------

void PortGraph::validate() const {
  std::vector<std::vector<int>> in_seen(nodes.size()), out_seen(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    in_seen[n].assign(nodes[n].dom().size(), 0);
    out_seen[n].assign(nodes[n].cod().size(), 0);
  }
  std::vector<int> dom_seen(dom.size(), 0), cod_seen(cod.size(), 0);
  for (const auto &w : wires) {
    Obj src_type, dst_type;
    if (w.src.boundary()) {
      if (w.src.port >= dom.size())
        throw std::invalid_argument("wire source beyond domain");
      ++dom_seen[w.src.port];
      src_type = dom[w.src.port];
    } else {
      if (w.src.node >= nodes.size() ||
          w.src.port >= nodes[w.src.node].cod().size())
        throw std::invalid_argument("wire source port does not exist");
      ++out_seen[w.src.node][w.src.port];
      src_type = nodes[w.src.node].cod()[w.src.port];
    }
    if (w.dst.boundary()) {
      if (w.dst.port >= cod.size())
        throw std::invalid_argument("wire target beyond codomain");
      ++cod_seen[w.dst.port];
      dst_type = cod[w.dst.port];
    } else {
      if (w.dst.node >= nodes.size() ||
          w.dst.port >= nodes[w.dst.node].dom().size())
        throw std::invalid_argument("wire target port does not exist");
      ++in_seen[w.dst.node][w.dst.port];
      dst_type = nodes[w.dst.node].dom()[w.dst.port];
    }
    if (src_type != w.type || dst_type != w.type)
      throw std::invalid_argument("wire type disagrees with its ports");
  }
  auto all_once = [](const std::vector<int> &v) {
    return std::all_of(v.begin(), v.end(), [](int c) { return c == 1; });
  };
  for (std::size_t n = 0; n < nodes.size(); ++n)
    if (!all_once(in_seen[n]) || !all_once(out_seen[n]))
      throw std::invalid_argument("node " + std::to_string(n) +
                                  " has a port without exactly one wire");
  if (!all_once(dom_seen) || !all_once(cod_seen))
    throw std::invalid_argument("boundary position without exactly one wire");
}

Incidence PortGraph::incidence() const {
  Incidence inc;
  inc.in.resize(nodes.size());
  inc.out.resize(nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    inc.in[n].assign(nodes[n].dom().size(), SIZE_MAX);
    inc.out[n].assign(nodes[n].cod().size(), SIZE_MAX);
  }
  inc.dom.assign(dom.size(), SIZE_MAX);
  inc.cod.assign(cod.size(), SIZE_MAX);
  for (std::size_t i = 0; i < wires.size(); ++i) {
    const auto &w = wires[i];
    if (w.src.boundary())
      inc.dom[w.src.port] = i;
    else
      inc.out[w.src.node][w.src.port] = i;
    if (w.dst.boundary())
      inc.cod[w.dst.port] = i;
    else
      inc.in[w.dst.node][w.dst.port] = i;
  }
  return inc;
}

bool PortGraph::acyclic() const {
  std::vector<std::size_t> indeg(nodes.size(), 0);
  std::vector<std::vector<std::size_t>> succ(nodes.size());
  for (const auto &w : wires)
    if (!w.src.boundary() && !w.dst.boundary()) {
      succ[w.src.node].push_back(w.dst.node);
      ++indeg[w.dst.node];
    }
  std::vector<std::size_t> ready;
  for (std::size_t n = 0; n < nodes.size(); ++n)
    if (indeg[n] == 0)
      ready.push_back(n);
  std::size_t done = 0;
  while (!ready.empty()) {
    auto n = ready.back();
    ready.pop_back();
    ++done;
    for (auto m : succ[n])
      if (--indeg[m] == 0)
        ready.push_back(m);
  }
  return done == nodes.size();
}

namespace {

// Numbers the nodes reachable from `starts` breadth-first, visiting ports in
// order (inputs before outputs). Appends to `order`.
void traverse(const PortGraph &g, const Incidence &inc,
              const std::vector<std::size_t> &starts,
              std::vector<std::size_t> &number,
              std::vector<std::size_t> &order) {
  std::queue<std::size_t> work;
  auto visit = [&](const Endpoint &e) {
    if (e.boundary() || number[e.node] != SIZE_MAX)
      return;
    number[e.node] = order.size();
    order.push_back(e.node);
    work.push(e.node);
  };
  for (auto s : starts)
    visit(Endpoint{s, 0});
  while (!work.empty()) {
    auto n = work.front();
    work.pop();
    for (auto w : inc.in[n])
      visit(g.wires[w].src);
    for (auto w : inc.out[n])
      visit(g.wires[w].dst);
  }
}

std::string encode_numbered(const PortGraph &g,
                            const std::vector<std::size_t> &order,
                            const std::vector<std::size_t> &number,
                            bool with_boundary) {
  std::ostringstream os;
  if (with_boundary)
    os << "dom=" << interface_str(g.dom) << ";cod=" << interface_str(g.cod)
       << ";";
  os << "nodes=";
  for (auto n : order)
    os << g.nodes[n].name() << ",";
  std::vector<std::array<std::size_t, 5>> rows;
  std::set<std::size_t> members(order.begin(), order.end());
  auto end_key = [&](const Endpoint &e) {
    return e.boundary() ? SIZE_MAX : number[e.node];
  };
  for (const auto &w : g.wires) {
    bool touches = (!w.src.boundary() && members.count(w.src.node)) ||
                   (!w.dst.boundary() && members.count(w.dst.node));
    bool pure_boundary = w.src.boundary() && w.dst.boundary();
    if (!touches && !(with_boundary && pure_boundary))
      continue;
    rows.push_back({end_key(w.src), w.src.port, end_key(w.dst), w.dst.port,
                    static_cast<std::size_t>(w.type)});
  }
  std::sort(rows.begin(), rows.end());
  os << ";wires=";
  for (const auto &r : rows) {
    auto end = [](std::size_t n) {
      return n == SIZE_MAX ? std::string("B") : std::to_string(n);
    };
    os << end(r[0]) << "." << r[1] << ">" << end(r[2]) << "." << r[3] << ":"
       << obj_char(static_cast<Obj>(r[4])) << ",";
  }
  return os.str();
}

} // namespace

std::string PortGraph::canonical_form() const {
  const Incidence inc = incidence();
  std::vector<std::size_t> number(nodes.size(), SIZE_MAX), order;

  std::vector<std::size_t> anchors;
  for (auto w : inc.dom)
    if (!wires[w].dst.boundary())
      anchors.push_back(wires[w].dst.node);
  for (auto w : inc.cod)
    if (!wires[w].src.boundary())
      anchors.push_back(wires[w].src.node);
  traverse(*this, inc, anchors, number, order);

  // Floating components: each gets the least encoding over its start nodes.
  std::vector<std::pair<std::string, std::vector<std::size_t>>> floating;
  std::vector<bool> claimed(nodes.size(), false);
  for (auto n : order)
    claimed[n] = true;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (claimed[n])
      continue;
    std::vector<std::size_t> scratch(nodes.size(), SIZE_MAX), comp;
    traverse(*this, inc, {n}, scratch, comp);
    for (auto m : comp)
      claimed[m] = true;
    std::string best;
    std::vector<std::size_t> best_order;
    const Label min_label =
        nodes[*std::min_element(comp.begin(), comp.end(), [&](auto a, auto b) {
          return nodes[a] < nodes[b];
        })];
    for (auto start : comp) {
      if (!(nodes[start] == min_label))
        continue;
      std::vector<std::size_t> num(nodes.size(), SIZE_MAX), ord;
      traverse(*this, inc, {start}, num, ord);
      auto enc = encode_numbered(*this, ord, num, false);
      if (best_order.empty() || enc < best) {
        best = std::move(enc);
        best_order = std::move(ord);
      }
    }
    floating.emplace_back(std::move(best), std::move(best_order));
  }
  std::sort(floating.begin(), floating.end());
  for (auto &[enc, ord] : floating)
    for (auto n : ord) {
      number[n] = order.size();
      order.push_back(n);
    }
  return encode_numbered(*this, order, number, true);
}

std::string PortGraph::digest() const {
  const std::string text = canonical_form();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

nlohmann::json PortGraph::to_json() const {
  using nlohmann::json;
  json ns = json::array();
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    json node = {{"id", n},
                 {"label", typing_table()[static_cast<std::size_t>(nodes[n].gen)].name}};
    if (nodes[n].gen == Gen::Atom)
      node["arg"] = std::string(1, nodes[n].letter);
    ns.push_back(node);
  }
  json ws = json::array();
  for (const auto &w : wires) {
    json from = w.src.boundary() ? json::array({"in", w.src.port})
                                 : json::array({w.src.node, w.src.port});
    json to = w.dst.boundary() ? json::array({"out", w.dst.port})
                               : json::array({w.dst.node, w.dst.port});
    ws.push_back({{"from", from},
                  {"to", to},
                  {"type", std::string(1, obj_char(w.type))}});
  }
  auto iface = [](const Interface &i) {
    json a = json::array();
    for (auto o : i)
      a.push_back(std::string(1, obj_char(o)));
    return a;
  };
  return {{"nodes", ns}, {"wires", ws}, {"dom", iface(dom)}, {"cod", iface(cod)}};
}

PortGraph PortGraph::from_json(const nlohmann::json &j) {
  PortGraph g;
  auto iface = [](const nlohmann::json &a) {
    Interface i;
    for (const auto &o : a) {
      auto s = o.get<std::string>();
      if (s.size() != 1)
        throw std::invalid_argument("interface entries are single characters");
      i.push_back(obj_from_char(s[0]));
    }
    return i;
  };
  g.dom = iface(j.at("dom"));
  g.cod = iface(j.at("cod"));
  const auto &ns = j.at("nodes");
  g.nodes.resize(ns.size());
  std::vector<bool> seen(ns.size(), false);
  for (const auto &n : ns) {
    auto id = n.at("id").get<std::size_t>();
    if (id >= ns.size() || seen[id])
      throw std::invalid_argument("node ids must be 0..n-1 without repeats");
    seen[id] = true;
    auto name = n.at("label").get<std::string>();
    bool found = false;
    for (std::size_t k = 0; k < typing_table().size(); ++k)
      if (name == typing_table()[k].name) {
        g.nodes[id] = Label{static_cast<Gen>(k)};
        found = true;
      }
    if (!found)
      throw std::invalid_argument("unknown generator label '" + name + "'");
    if (g.nodes[id].gen == Gen::Atom) {
      auto arg = n.at("arg").get<std::string>();
      if (arg.size() != 1)
        throw std::invalid_argument("atom argument must be one letter");
      g.nodes[id].letter = arg[0];
    }
  }
  for (const auto &w : j.at("wires")) {
    auto endpoint = [](const nlohmann::json &e, const char *tag) {
      if (e.at(0).is_string()) {
        if (e.at(0).get<std::string>() != tag)
          throw std::invalid_argument(std::string("expected boundary tag ") + tag);
        return Endpoint{Endpoint::kBoundary, e.at(1).get<std::size_t>()};
      }
      return Endpoint{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()};
    };
    auto type = w.at("type").get<std::string>();
    if (type.size() != 1)
      throw std::invalid_argument("wire type must be one character");
    g.wires.push_back(
        {endpoint(w.at("from"), "in"), endpoint(w.at("to"), "out"), obj_from_char(type[0])});
  }
  g.validate();
  return g;
}

namespace {

// Threads open wire ends through the term; a wire is emitted when its
// end is consumed, so every node and wire is written once.
class Builder {
public:
  struct End {
    Endpoint src;
    Obj type;
  };

  PortGraph g;

  std::vector<End> run(const Term &t, std::vector<End> ins) {
    switch (t.kind()) {
    case Term::Kind::Gen: {
      const std::size_t n = g.nodes.size();
      g.nodes.push_back(t.label());
      for (std::size_t k = 0; k < ins.size(); ++k)
        g.wires.push_back({ins[k].src, {n, k}, ins[k].type});
      std::vector<End> outs;
      const Interface &cod = t.label().cod();
      for (std::size_t k = 0; k < cod.size(); ++k)
        outs.push_back({{n, k}, cod[k]});
      return outs;
    }
    case Term::Kind::Id:
      return ins;
    case Term::Kind::Sym:
      return {ins[1], ins[0]};
    case Term::Kind::Seq:
      return run(t.second(), run(t.first(), std::move(ins)));
    case Term::Kind::Par: {
      const std::size_t split = dom_size(t.first());
      std::vector<End> rest(ins.begin() + split, ins.end());
      ins.resize(split);
      std::vector<End> outs = run(t.first(), std::move(ins));
      std::vector<End> more = run(t.second(), std::move(rest));
      outs.insert(outs.end(), more.begin(), more.end());
      return outs;
    }
    }
    throw std::logic_error("to_port_graph: unknown term kind");
  }

private:
  std::size_t dom_size(const Term &t) {
    if (auto it = dom_.find(&t); it != dom_.end())
      return it->second;
    std::size_t n = 0;
    switch (t.kind()) {
    case Term::Kind::Gen:
      n = t.label().dom().size();
      break;
    case Term::Kind::Id:
    case Term::Kind::Sym:
      n = t.objects().size();
      break;
    case Term::Kind::Seq:
      n = dom_size(t.first());
      break;
    case Term::Kind::Par:
      n = dom_size(t.first()) + dom_size(t.second());
      break;
    }
    dom_.emplace(&t, n);
    return n;
  }

  std::unordered_map<const Term *, std::size_t> dom_;
};

} // namespace

PortGraph to_port_graph(const Term &t) {
  auto [dom, cod] = typecheck(t);
  Builder b;
  b.g.dom = dom;
  b.g.cod = cod;
  std::vector<Builder::End> ins;
  for (std::size_t k = 0; k < dom.size(); ++k)
    ins.push_back({{Endpoint::kBoundary, k}, dom[k]});
  const auto outs = b.run(t, std::move(ins));
  for (std::size_t k = 0; k < outs.size(); ++k)
    b.g.wires.push_back({outs[k].src, {Endpoint::kBoundary, k}, outs[k].type});
  return std::move(b.g);
}

namespace {

// Adjacent transpositions turning `current` into `target` (same multiset).
std::vector<Term> permutation_layers(std::vector<std::size_t> current,
                                     const std::vector<std::size_t> &target,
                                     const std::vector<Obj> &type_of) {
  std::vector<Term> layers;
  std::map<std::size_t, std::size_t> rank;
  for (std::size_t i = 0; i < target.size(); ++i)
    rank[target[i]] = i;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (rank[current[i]] > rank[current[i + 1]]) {
        Interface before, after;
        for (std::size_t k = 0; k < i; ++k)
          before.push_back(type_of[current[k]]);
        for (std::size_t k = i + 2; k < current.size(); ++k)
          after.push_back(type_of[current[k]]);
        layers.push_back(with_ids(
            before, Term::sym(type_of[current[i]], type_of[current[i + 1]]), after));
        std::swap(current[i], current[i + 1]);
        swapped = true;
      }
    }
  }
  return layers;
}

} // namespace

Term to_term(const PortGraph &g) {
  if (!g.acyclic())
    throw std::invalid_argument("to_term: port graph has a directed cycle");
  const Incidence inc = g.incidence();
  std::vector<Obj> type_of(g.wires.size());
  for (std::size_t i = 0; i < g.wires.size(); ++i)
    type_of[i] = g.wires[i].type;

  std::vector<std::size_t> current = inc.dom; // live wires, top to bottom
  std::vector<Term> layers;
  auto types = [&](auto first, auto last) {
    Interface i;
    for (auto it = first; it != last; ++it)
      i.push_back(type_of[*it]);
    return i;
  };

  // Kahn order, smallest ready node first.
  std::vector<std::size_t> waiting(g.nodes.size());
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    for (auto w : inc.in[n])
      waiting[n] += g.wires[w].src.boundary() ? 0 : 1;
  std::set<std::size_t> ready;
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (waiting[n] == 0)
      ready.insert(n);

  while (!ready.empty()) {
    auto n = *ready.begin();
    ready.erase(ready.begin());
    const auto &ins = inc.in[n];
    std::size_t at = current.size();
    if (!ins.empty()) {
      // Gather the inputs contiguously, starting where the first one sits.
      at = std::find(current.begin(), current.end(), ins[0]) - current.begin();
      std::vector<std::size_t> rest, target;
      for (auto w : current)
        if (std::find(ins.begin(), ins.end(), w) == ins.end())
          rest.push_back(w);
      std::size_t keep = 0;
      for (std::size_t k = 0; k < at; ++k)
        if (std::find(ins.begin(), ins.end(), current[k]) == ins.end())
          ++keep;
      target.assign(rest.begin(), rest.begin() + keep);
      target.insert(target.end(), ins.begin(), ins.end());
      target.insert(target.end(), rest.begin() + keep, rest.end());
      auto perm = permutation_layers(current, target, type_of);
      layers.insert(layers.end(), perm.begin(), perm.end());
      current = target;
      at = keep;
    }
    Interface before = types(current.begin(), current.begin() + at);
    Interface after = types(current.begin() + at + ins.size(), current.end());
    layers.push_back(with_ids(before, Term::gen(g.nodes[n]), after));
    std::vector<std::size_t> next(current.begin(), current.begin() + at);
    next.insert(next.end(), inc.out[n].begin(), inc.out[n].end());
    next.insert(next.end(), current.begin() + at + ins.size(), current.end());
    current = std::move(next);
    for (auto w : inc.out[n]) {
      const auto &d = g.wires[w].dst;
      if (!d.boundary() && --waiting[d.node] == 0)
        ready.insert(d.node);
    }
  }
  auto perm = permutation_layers(current, inc.cod, type_of);
  layers.insert(layers.end(), perm.begin(), perm.end());
  if (layers.empty())
    return Term::id(g.dom);
  return Term::seq_all(layers);
}

bool smc_equal(const PortGraph &g, const PortGraph &h) {
  return g.dom == h.dom && g.cod == h.cod &&
         g.nodes.size() == h.nodes.size() &&
         g.wires.size() == h.wires.size() &&
         g.canonical_form() == h.canonical_form();
}

bool smc_equal(const Term &s, const Term &t) {
  return smc_equal(to_port_graph(s), to_port_graph(t));
}

namespace {
bool all_right(const Interface &i) {
  return std::all_of(i.begin(), i.end(), [](Obj o) { return o == Obj::Right; });
}
} // namespace

bool is_left_to_right(const Term &t) {
  auto [d, c] = typecheck(t);
  return all_right(d) && all_right(c);
}

bool is_left_to_right(const PortGraph &g) {
  return all_right(g.dom) && all_right(g.cod);
}

bool is_atomic(const PortGraph &g) {
  return std::all_of(g.nodes.begin(), g.nodes.end(), [](const Label &l) {
    return !l.red() || l.gen == Gen::Atom;
  });
}

bool is_atomic(const Term &t) {
  switch (t.kind()) {
  case Term::Kind::Gen:
    return !t.label().red() || t.label().gen == Gen::Atom;
  case Term::Kind::Seq:
  case Term::Kind::Par:
    return is_atomic(t.first()) && is_atomic(t.second());
  default:
    return true;
  }
}

std::string render_dot(const Term &t) {
  const PortGraph g = to_port_graph(t);
  std::ostringstream os;
  os << "digraph kaa {\n  rankdir=LR;\n  node [fontname=\"Helvetica\"];\n";
  os << "  { rank=source;";
  for (std::size_t k = 0; k < g.dom.size(); ++k)
    os << " in" << k << " [shape=point];";
  os << " }\n  { rank=sink;";
  for (std::size_t k = 0; k < g.cod.size(); ++k)
    os << " out" << k << " [shape=point];";
  os << " }\n";
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const auto &l = g.nodes[n];
    os << "  n" << n << " [label=\"" << l.name() << "\", shape="
       << (l.red() ? "ellipse, color=red" : "box") << "];\n";
  }
  for (const auto &w : g.wires) {
    auto end = [](const Endpoint &e, const char *side) {
      return e.boundary() ? std::string(side) + std::to_string(e.port)
                          : "n" + std::to_string(e.node);
    };
    os << "  " << end(w.src, "in") << " -> " << end(w.dst, "out") << " [color="
       << (w.type == Obj::Red ? "red" : "black");
    if (w.type == Obj::Left)
      os << ", dir=back";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace kaa
