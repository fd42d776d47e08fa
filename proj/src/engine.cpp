#include <algorithm>
#include <tuple>

#include "sisa/operations.hpp"
#include "sisa/text.hpp"

namespace sisa {

double apply_weighting(double beta, double so) { return so * (1.0 + beta); }

double apply_shift(double alpha, double so) { return so >= 0.0 ? so - alpha : so + alpha; }

std::string Transformation::describe() const {
  if (kind == Kind::shift) return "shift(" + text::format_number(param) + ")";
  if (booster) return "weighting(booster)";
  return "weighting(" + text::format_number(param) + ")";
}

std::string ScopeSpec::describe() const {
  switch (kind) {
    case Kind::target_node: return "target_node";
    case Kind::branch: return "b(" + deprel + ")";
    case Kind::subjl: return "subjl";
    case Kind::subjr: return "subjr";
    case Kind::all: return "all";
  }
  return {};
}

namespace {

bool in_set(const std::optional<std::set<std::string>>& set, std::string_view value) {
  return !set || set->contains(std::string(value));
}

double transform(const Transformation& tau, double beta, double so) {
  return tau.kind == Transformation::Kind::shift ? apply_shift(tau.param, so) : apply_weighting(beta, so);
}

}  // namespace

bool matches(const OperationDefinition& defn, const Token& tok) {
  const auto& c = defn.trigger;
  if (c.forms && !c.forms->contains(text::to_lower(tok.form)) && !c.forms->contains(tok.lookup_lemma())) {
    return false;
  }
  return in_set(c.pos, tok.upos) && in_set(c.deprels, tok.bare_deprel());
}

std::optional<ScopeResolution> resolve_scope(std::span<const ScopeSpec> scopes, const LevelView& level) {
  const auto& branches = level.branches;
  for (std::size_t s = 0; s < scopes.size(); ++s) {
    const ScopeSpec& spec = scopes[s];
    switch (spec.kind) {
      case ScopeSpec::Kind::target_node:
        if (level.head_so != 0.0) return ScopeResolution{s, spec.kind, 0};
        break;
      case ScopeSpec::Kind::branch:
        for (std::size_t i = 0; i < branches.size(); ++i) {
          if (branches[i].deprel == spec.deprel && branches[i].so != 0.0) return ScopeResolution{s, spec.kind, i};
        }
        break;
      case ScopeSpec::Kind::subjl:
        for (std::size_t i = 0; i < branches.size() && branches[i].id < level.origin_id; ++i) {
          if (branches[i].so != 0.0) return ScopeResolution{s, spec.kind, i};
        }
        break;
      case ScopeSpec::Kind::subjr:
        for (std::size_t i = 0; i < branches.size(); ++i) {
          if (branches[i].id > level.origin_id && branches[i].so != 0.0) return ScopeResolution{s, spec.kind, i};
        }
        break;
      case ScopeSpec::Kind::all:
        return ScopeResolution{s, spec.kind, 0};
    }
  }
  return std::nullopt;
}

namespace {

struct Pending {
  std::size_t def = 0;
  int trigger_id = 0;
  int remaining = 0;
  double beta = 0.0;
  int origin_id = 0;  // branch (or node) the operation arrives from at the next level
};

std::vector<int> post_order(const DepTree& tree) {
  std::vector<int> order;
  order.reserve(tree.size());
  std::vector<std::pair<int, std::size_t>> stack{{tree.root_id(), 0}};
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const auto kids = tree.children(id);
    if (next < kids.size()) {
      const int child = kids[next++];
      stack.emplace_back(child, 0);
    } else {
      order.push_back(id);
      stack.pop_back();
    }
  }
  return order;
}

double booster_beta(const Transformation& tau, const Token& tok, NodeRecord& rec, const std::string& op) {
  if (const auto v = tau.booster->value(text::to_lower(tok.form)); v) return *v;
  if (const auto v = tau.booster->value(tok.lookup_lemma()); v) return *v;
  OperationEvent w;
  w.kind = OperationEvent::Kind::warning;
  w.op = op;
  w.trigger_id = tok.id;
  w.message = "no booster value for '" + tok.form + "', beta 0";
  rec.events.push_back(std::move(w));
  return 0.0;
}

}  // namespace

SoTrace compute_so(const DepTree& tree, const SentimentLexicon& lex, std::span<const OperationDefinition> defs) {
  struct NodeResult {
    double subtree_so = 0.0;
    std::vector<Pending> pending;
  };
  std::vector<NodeResult> results(tree.size() + 1);
  SoTrace trace;
  trace.nodes.reserve(tree.size());

  for (const int id : post_order(tree)) {
    const Token& tok = tree.token(id);
    const bool is_root = id == tree.root_id();
    NodeRecord rec;
    rec.id = id;
    rec.form = tok.form;
    rec.lexical_so = lookup(lex, tok.form, tok.lookup_lemma(), tok.upos);

    const auto kids = tree.children(id);
    std::vector<BranchView> branches;
    branches.reserve(kids.size());
    for (int c : kids) branches.push_back(BranchView{c, tree.token(c).bare_deprel(), results[c].subtree_so});

    std::vector<Pending> due;
    std::vector<Pending> up;
    for (int c : kids) {
      for (Pending p : results[c].pending) {
        OperationEvent e;
        e.kind = OperationEvent::Kind::arrived;
        e.op = defs[p.def].name;
        e.trigger_id = p.trigger_id;
        e.remaining_before = p.remaining;
        e.remaining_after = --p.remaining;
        rec.events.push_back(std::move(e));
        p.origin_id = c;
        (p.remaining == 0 ? due : up).push_back(p);
      }
      results[c].pending.clear();
    }
    for (std::size_t d = 0; d < defs.size(); ++d) {
      if (!matches(defs[d], tok)) continue;
      Pending p{d, id, defs[d].delta, defs[d].tau.param, id};
      if (defs[d].tau.from_booster()) p.beta = booster_beta(defs[d].tau, tok, rec, defs[d].name);
      OperationEvent e;
      e.kind = OperationEvent::Kind::triggered;
      e.op = defs[d].name;
      e.trigger_id = id;
      e.remaining_before = e.remaining_after = p.remaining;
      e.beta = p.beta;
      rec.events.push_back(std::move(e));
      (p.remaining == 0 ? due : up).push_back(p);
    }

    const std::size_t regular = due.size();
    if (is_root) {
      due.insert(due.end(), up.begin(), up.end());
      up.clear();
    }
    std::vector<std::size_t> order(due.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const Pending& x = due[a];
      const Pending& y = due[b];
      return std::tuple(-defs[x.def].priority, x.trigger_id, x.def) <
             std::tuple(-defs[y.def].priority, y.trigger_id, y.def);
    });

    double head = rec.lexical_so;
    double adjust = 0.0;
    for (std::size_t k : order) {
      const Pending& p = due[k];
      const OperationDefinition& def = defs[p.def];
      const bool forced = k >= regular;
      OperationEvent e;
      e.op = def.name;
      e.trigger_id = p.trigger_id;
      e.remaining_before = e.remaining_after = p.remaining;
      e.beta = p.beta;
      const auto res = resolve_scope(def.scopes, LevelView{head, branches, p.origin_id});
      if (!res) {
        e.kind = OperationEvent::Kind::discarded;
        rec.events.push_back(std::move(e));
        continue;
      }
      e.kind = forced ? OperationEvent::Kind::forced : OperationEvent::Kind::applied;
      e.scope = def.scopes[res->spec_index].describe();
      switch (res->kind) {
        case ScopeSpec::Kind::target_node:
          e.scope_node = id;
          e.before = head;
          head = transform(def.tau, p.beta, head);
          e.after = head;
          break;
        case ScopeSpec::Kind::all: {
          double total = head;
          for (const auto& b : branches) total += b.so;
          total += adjust;
          e.scope_node = id;
          e.before = total;
          e.after = transform(def.tau, p.beta, total);
          adjust += e.after - total;
          break;
        }
        default: {
          BranchView& b = branches[res->branch];
          e.scope_node = b.id;
          e.before = b.so;
          b.so = transform(def.tau, p.beta, b.so);
          e.after = b.so;
          break;
        }
      }
      rec.events.push_back(std::move(e));
    }

    double subtree = head;
    for (const auto& b : branches) subtree += b.so;
    subtree += adjust;
    rec.subtree_so = subtree;
    results[id].subtree_so = subtree;
    results[id].pending = std::move(up);
    trace.nodes.push_back(std::move(rec));
  }
  trace.sentence_so = results[tree.root_id()].subtree_so;
  return trace;
}

std::string format_trace(const SoTrace& trace) {
  using text::format_number;
  std::string out;
  for (const NodeRecord& n : trace.nodes) {
    out += "node " + std::to_string(n.id) + " '" + n.form + "' lexical " + format_number(n.lexical_so) + '\n';
    for (const OperationEvent& e : n.events) {
      const std::string tag = e.op + "@" + std::to_string(e.trigger_id);
      switch (e.kind) {
        case OperationEvent::Kind::triggered:
          out += "  trigger " + tag + " remaining " + std::to_string(e.remaining_after);
          out += " param " + format_number(e.beta) + '\n';
          break;
        case OperationEvent::Kind::arrived:
          out += "  arrive " + tag + " remaining " + std::to_string(e.remaining_before) + "->" +
                 std::to_string(e.remaining_after) + '\n';
          break;
        case OperationEvent::Kind::applied:
        case OperationEvent::Kind::forced:
          out += e.kind == OperationEvent::Kind::forced ? "  force-apply " : "  apply ";
          out += tag + " scope " + e.scope;
          if (e.scope == "all") out += " [backoff]";
          out += " node " + std::to_string(e.scope_node) + ' ' + format_number(e.before) + " -> " +
                 format_number(e.after);
          if (e.kind == OperationEvent::Kind::forced) out += " pending " + std::to_string(e.remaining_before);
          out += '\n';
          break;
        case OperationEvent::Kind::discarded:
          out += "  discard " + tag + " no scope matched\n";
          break;
        case OperationEvent::Kind::warning:
          out += "  warning " + tag + ' ' + e.message + '\n';
          break;
      }
    }
    out += "  subtree " + format_number(n.subtree_so) + '\n';
  }
  out += "sentence_so " + format_number(trace.sentence_so) + '\n';
  return out;
}

std::string trace_document(const Document& doc, const SentimentLexicon& lex,
                           std::span<const OperationDefinition> defs) {
  std::string out;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    out += "# " + doc.source_id + " sentence " + std::to_string(i + 1) + '\n';
    out += format_trace(compute_so(doc.sentences[i], lex, defs));
  }
  return out;
}

}  // namespace sisa
