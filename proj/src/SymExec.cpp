//===--- SymExec.cpp - Path-sensitive symbolic execution --------*- C++ -*-===//
//
// Part of the minisa project, under the Apache License v2.0.
// See LICENSE for license information.
//
//===----------------------------------------------------------------------===//

#include "minisa/SymExec.hpp"

#include "minisa/Dataflow.hpp"

#include "json.hpp"

#include <cassert>
#include <iostream>
#include <tuple>

namespace minisa {

std::map<std::string, std::int64_t> EngineStats::toMap() const {
  return {
      {"exploded_nodes", nodesCreated},
      {"top_level_functions", topLevelFunctions},
      {"paths_terminated_block_visits", pathsTerminatedBlockVisits},
      {"analyses_stopped_max_nodes", analysesStoppedMaxNodes},
      {"inlined_calls", inlinedCalls},
      {"conservative_calls_no_body", conservativeCallsNoBody},
      {"conservative_calls_depth_limit", conservativeCallsDepthLimit},
      {"conservative_calls_large_cfg", conservativeCallsLargeCfg},
      {"symbols_conjured", symbolsConjured},
  };
}

std::optional<SVal> CheckerContext::valueOf(const AstNode *expr) const {
  if (expr->kind == AstKind::IntLit)
    return SVal::concrete(expr->intValue);
  if (const SVal *v = state.lookupEnv(frame, expr->id))
    return *v;
  return std::nullopt;
}

Zeroness CheckerContext::zeronessOf(const SVal &value) const {
  if (value.isConcrete())
    return queryZeroness(value.asConcrete());
  if (value.isSymbolic())
    return queryZeroness(state.constraints, value.asSymbolic(), algebra);
  return Zeroness::MaybeZero;
}

namespace {

struct FrameInfo {
  const AstNode *function = nullptr;
  int callSiteId = -1; // call node id in the caller
  int caller = -1;     // frame index, -1 for top level
  int depth = 0;       // number of inlined frames below this one
};

struct WorkItem {
  int node = 0;
  std::map<std::pair<int, int>, int> blockVisits; // (frame, block) -> count
};

ArithOp arithOpFor(BinaryOpKind op) {
  switch (op) {
  case BinaryOpKind::Add:
    return ArithOp::Add;
  case BinaryOpKind::Sub:
    return ArithOp::Sub;
  case BinaryOpKind::Mul:
    return ArithOp::Mul;
  case BinaryOpKind::Div:
    return ArithOp::Div;
  case BinaryOpKind::Rem:
    return ArithOp::Rem;
  case BinaryOpKind::Lt:
    return ArithOp::Lt;
  case BinaryOpKind::Le:
    return ArithOp::Le;
  case BinaryOpKind::Gt:
    return ArithOp::Gt;
  case BinaryOpKind::Ge:
    return ArithOp::Ge;
  case BinaryOpKind::Eq:
    return ArithOp::Eq;
  case BinaryOpKind::Ne:
    return ArithOp::Ne;
  default:
    assert(false && "logical operators never reach evaluation");
    return ArithOp::Add;
  }
}

std::optional<RangeAlgebra::Rel> relFor(BinaryOpKind op) {
  switch (op) {
  case BinaryOpKind::Eq:
    return RangeAlgebra::Rel::Eq;
  case BinaryOpKind::Ne:
    return RangeAlgebra::Rel::Ne;
  case BinaryOpKind::Lt:
    return RangeAlgebra::Rel::Lt;
  case BinaryOpKind::Le:
    return RangeAlgebra::Rel::Le;
  case BinaryOpKind::Gt:
    return RangeAlgebra::Rel::Gt;
  case BinaryOpKind::Ge:
    return RangeAlgebra::Rel::Ge;
  default:
    return std::nullopt;
  }
}

// a rel b == b mirror(rel) a
RangeAlgebra::Rel mirror(RangeAlgebra::Rel rel) {
  switch (rel) {
  case RangeAlgebra::Rel::Lt:
    return RangeAlgebra::Rel::Gt;
  case RangeAlgebra::Rel::Le:
    return RangeAlgebra::Rel::Ge;
  case RangeAlgebra::Rel::Gt:
    return RangeAlgebra::Rel::Lt;
  case RangeAlgebra::Rel::Ge:
    return RangeAlgebra::Rel::Le;
  default:
    return rel; // == and != are symmetric
  }
}

class Engine {
public:
  Engine(const AstNode *program, const std::vector<Cfg> &cfgs,
         const std::vector<Checker *> &checkers, const EngineOptions &options,
         AnalysisResult &result)
      : program_(program), checkers_(checkers), opts_(options),
        result_(result) {
    for (const Cfg &cfg : cfgs)
      cfgByFn_[cfg.function] = &cfg;
    indexNodes();
  }

  void run() {
    for (const AstNode *fn : topLevelOrder()) {
      if (inlined_.count(fn))
        continue; // already covered while inlining an earlier top level
      runTopLevel(fn);
      ++stats_.topLevelFunctions;
    }
    dedupReports();
    result_.stats = stats_;
  }

private:
  const AstNode *program_;
  std::vector<Checker *> checkers_;
  EngineOptions opts_;
  AnalysisResult &result_;

  std::map<const AstNode *, const Cfg *> cfgByFn_;
  std::map<int, const AstNode *> nodeById_;
  std::map<const AstNode *, LivenessResult> liveness_;
  EngineStats stats_;
  std::set<const AstNode *> inlined_;

  // Per top-level analysis.
  ExplodedGraph *graph_ = nullptr;
  std::vector<FrameInfo> frames_;
  std::map<std::tuple<const AstNode *, int, int>, int> frameIndex_;
  std::map<const AstNode *, int> largeInlineCount_;
  std::vector<WorkItem> worklist_;
  bool stopped_ = false;

  struct RawReport {
    int node = 0;
    std::string checker;
    std::string message;
    SourceLocation loc;
  };
  std::vector<RawReport> rawReports_;

  //===--------------------------------------------------------------------===
  // Plumbing
  //===--------------------------------------------------------------------===

  void indexNodes() {
    walkPreOrder(program_, [this](const AstNode *n) { nodeById_[n->id] = n; });
    // CFG construction clones some statements and creates temporaries; index
    // those too so reports and owners resolve.
    for (const auto &[fn, cfg] : cfgByFn_) {
      (void)fn;
      for (const BasicBlock &b : cfg->blocks) {
        for (const AstNode *e : b.elements)
          walkPreOrder(e, [this](const AstNode *n) { nodeById_[n->id] = n; });
        if (b.term.cond)
          walkPreOrder(b.term.cond,
                       [this](const AstNode *n) { nodeById_[n->id] = n; });
        if (b.term.returnExpr)
          walkPreOrder(b.term.returnExpr,
                       [this](const AstNode *n) { nodeById_[n->id] = n; });
      }
    }
  }

  std::vector<const AstNode *> topLevelOrder() const {
    std::vector<const AstNode *> order;
    for (const AstNode *fn : program_->children)
      if (fn->hasBody && fn->name == "main")
        order.push_back(fn);
    for (const AstNode *fn : program_->children)
      if (fn->hasBody && fn->name != "main")
        order.push_back(fn);
    return order;
  }

  const Cfg &cfgOf(int frame) const {
    return *cfgByFn_.at(frames_[frame].function);
  }

  const LivenessResult &livenessOf(const AstNode *fn) {
    auto it = liveness_.find(fn);
    if (it == liveness_.end())
      it = liveness_.try_emplace(fn, *cfgByFn_.at(fn)).first;
    return it->second;
  }

  int internFrame(const AstNode *fn, int callSiteId, int caller) {
    auto key = std::make_tuple(fn, callSiteId, caller);
    auto it = frameIndex_.find(key);
    if (it != frameIndex_.end())
      return it->second;
    int id = static_cast<int>(frames_.size());
    frames_.push_back(
        {fn, callSiteId, caller, caller < 0 ? 0 : frames_[caller].depth + 1});
    frameIndex_.emplace(key, id);
    return id;
  }

  SymbolId conjure(const std::string &hint, bool named = false) {
    ++stats_.symbolsConjured;
    return result_.symbols.conjure(hint, named);
  }

  std::ostream &out() {
    return opts_.analysisOutput ? *opts_.analysisOutput : std::cout;
  }

  //===--------------------------------------------------------------------===
  // Environment scratch and dead-symbol collection
  //===--------------------------------------------------------------------===

  // Completed full expressions leave no environment entries behind; only
  // the frame's return slot (keyed by the function node id) survives.
  void wipeEnv(ProgramState &state, int frame) {
    int keep = frames_[frame].function->id;
    std::erase_if(state.env, [&](const auto &entry) {
      return entry.first.first == frame && entry.first.second != keep;
    });
  }

  void eraseFrame(ProgramState &state, int frame) {
    std::erase_if(state.env, [&](const auto &entry) {
      return entry.first.first == frame;
    });
    std::erase_if(state.store, [&](const auto &entry) {
      return entry.first.frame == frame;
    });
  }

  /// Store bindings of dead locals go away; parameters stay for the whole
  /// frame. Constraints survive only while some binding still mentions the
  /// symbol.
  void collectDead(ProgramState &state, int frame, const FlowFact &live,
                   const VarUniverse &universe) {
    if (!opts_.collectDeadSymbols)
      return;
    std::erase_if(state.store, [&](const auto &entry) {
      const MemRegion &region = entry.first;
      if (region.frame != frame || region.decl->kind != AstKind::VarDecl)
        return false;
      int index = universe.indexOf(region.decl);
      return index >= 0 && !live.count(index);
    });
    sweepConstraints(state);
  }

  void sweepConstraints(ProgramState &state) {
    if (!opts_.collectDeadSymbols)
      return;
    std::set<SymbolId> referenced;
    auto noteVal = [&](const SVal &v) {
      if (v.isSymbolic())
        referenced.insert(v.asSymbolic().sym);
      if (v.isRegion() && v.asRegion().element &&
          std::holds_alternative<SymExpr>(*v.asRegion().element))
        referenced.insert(std::get<SymExpr>(*v.asRegion().element).sym);
    };
    for (const auto &[key, value] : state.env) {
      (void)key;
      noteVal(value);
    }
    for (const auto &[region, value] : state.store) {
      if (region.element && std::holds_alternative<SymExpr>(*region.element))
        referenced.insert(std::get<SymExpr>(*region.element).sym);
      noteVal(value);
    }
    std::erase_if(state.constraints, [&](const auto &entry) {
      return !referenced.count(entry.first);
    });
  }

  //===--------------------------------------------------------------------===
  // Node creation
  //===--------------------------------------------------------------------===

  ExplodedNode *makeNode(const ProgramPoint &point, ProgramState state,
                         const ExplodedNode *pred, const WorkItem &item,
                         bool sink = false) {
    if (graph_->size() >= opts_.budget.maxNodes) {
      if (!stopped_) {
        stopped_ = true;
        ++stats_.analysesStoppedMaxNodes;
      }
      return nullptr;
    }
    auto [node, isNew] = graph_->getNode(point, std::move(state));
    if (pred)
      graph_->addEdge(pred->id, node->id);
    else
      graph_->markRoot(node->id);
    if (sink)
      node->sink = true;
    if (isNew) {
      ++stats_.nodesCreated;
      if (!node->sink)
        worklist_.push_back({node->id, item.blockVisits});
    }
    return node;
  }

  void attachReports(const CheckerContext &ctx, const ExplodedNode *node) {
    if (!node)
      return;
    for (const CheckerContext::Pending &p : ctx.pending)
      rawReports_.push_back({node->id, p.checker, p.message, p.loc});
  }

  CheckerContext makeContext(ProgramState state, int frame) {
    return CheckerContext(std::move(state), frame, frames_[frame].function,
                          result_.symbols);
  }

  //===--------------------------------------------------------------------===
  // Checker dispatch
  //===--------------------------------------------------------------------===

  void firePreStmt(CheckerContext &ctx, const AstNode *node) {
    for (Checker *c : checkers_) {
      c->preStmt(ctx, node);
      if (ctx.sinkRequested)
        return;
    }
  }
  void firePostStmt(CheckerContext &ctx, const AstNode *node,
                    const std::vector<ReadRecord> &reads) {
    for (Checker *c : checkers_) {
      c->postStmt(ctx, node, reads);
      if (ctx.sinkRequested)
        return;
    }
  }
  void firePreCall(CheckerContext &ctx, const AstNode *node) {
    for (Checker *c : checkers_) {
      c->preCall(ctx, node);
      if (ctx.sinkRequested)
        return;
    }
  }
  void firePostCall(CheckerContext &ctx, const AstNode *node, const SVal &ret,
                    const std::vector<SVal> &args) {
    for (Checker *c : checkers_) {
      c->postCall(ctx, node, ret, args);
      if (ctx.sinkRequested)
        return;
    }
  }
  void fireBranchCondition(CheckerContext &ctx, const AstNode *cond,
                           const SVal &value) {
    for (Checker *c : checkers_) {
      c->branchCondition(ctx, cond, value);
      if (ctx.sinkRequested)
        return;
    }
  }
  void fireEndOfPath(CheckerContext &ctx) {
    for (Checker *c : checkers_) {
      c->endOfPath(ctx);
      if (ctx.sinkRequested)
        return;
    }
  }

  //===--------------------------------------------------------------------===
  // Expression evaluation
  //===--------------------------------------------------------------------===

  struct LValue {
    enum class Kind { Scalar, Element, ArrayBlast };
    Kind kind = Kind::Scalar;
    MemRegion region;             // Scalar/Element
    const AstNode *decl = nullptr; // ArrayBlast: the array declaration
    int frame = 0;
  };

  /// One evaluation pass over an element or terminator expression. Values
  /// of finished subexpressions are memoized in the environment, so a pass
  /// interrupted by an inlined call (`suspended`) can be re-run after the
  /// CallExit and picks up exactly where it left off. `sunk` means a
  /// checker ended the path.
  struct EvalSession {
    Engine &eng;
    WorkItem &item;
    const ExplodedNode *origin;
    int frame;
    ProgramState state;
    bool suspended = false;
    bool sunk = false;
    std::vector<ReadRecord> reads;

    EvalSession(Engine &eng, WorkItem &item, const ExplodedNode *origin,
                int frame, ProgramState state)
        : eng(eng), item(item), origin(origin), frame(frame),
          state(std::move(state)) {}

    bool interrupted() const { return suspended || sunk; }

    void memo(const AstNode *e, const SVal &v) {
      state.env[{frame, e->id}] = v;
    }

    SVal eval(const AstNode *e) {
      if (interrupted())
        return SVal::unknown();
      switch (e->kind) {
      case AstKind::IntLit:
        return SVal::concrete(e->intValue);
      case AstKind::VarRef:
        return evalVarRef(e);
      case AstKind::ArrayIndex:
        return evalArrayRead(e);
      case AstKind::UnaryOp:
        return evalUnary(e);
      case AstKind::BinaryOp:
        return evalBinary(e);
      case AstKind::Call:
        return evalCall(e);
      default:
        assert(false && "not a value expression");
        return SVal::unknown();
      }
    }

    SVal evalVarRef(const AstNode *e) {
      if (const SVal *hit = state.lookupEnv(frame, e->id))
        return *hit;
      auto lv = lvalueOfVar(e);
      SVal v = load(lv.region);
      noteRead(e, v);
      if (sunk)
        return v;
      memo(e, v);
      return v;
    }

    SVal evalArrayRead(const AstNode *e) {
      if (const SVal *hit = state.lookupEnv(frame, e->id))
        return *hit;
      auto lv = evalLValue(e);
      if (interrupted() || !lv)
        return SVal::unknown();
      SVal v;
      if (lv->kind == LValue::Kind::ArrayBlast)
        v = blastReadValue(lv->frame, lv->decl);
      else
        v = load(lv->region);
      noteRead(e, v);
      if (sunk)
        return v;
      memo(e, v);
      return v;
    }

    SVal evalUnary(const AstNode *e) {
      if (const SVal *hit = state.lookupEnv(frame, e->id))
        return *hit;
      SVal v = eval(e->operand());
      if (interrupted())
        return SVal::unknown();
      SVal result = SVal::unknown();
      if (v.isUndefined()) {
        result = SVal::undefined();
      } else if (v.isConcrete()) {
        if (e->unaryOp == UnaryOpKind::Neg)
          result = SVal::concrete(static_cast<std::int64_t>(
              0 - static_cast<std::uint64_t>(v.asConcrete())));
        else
          result = SVal::concrete(v.asConcrete() == 0 ? 1 : 0);
      }
      memo(e, result);
      return result;
    }

    SVal evalBinary(const AstNode *e) {
      if (const SVal *hit = state.lookupEnv(frame, e->id))
        return *hit;
      assert(e->binaryOp != BinaryOpKind::LogicalAnd &&
             e->binaryOp != BinaryOpKind::LogicalOr &&
             "logical operators are lowered into CFG branches");
      SVal lhs = eval(e->lhs());
      if (interrupted())
        return SVal::unknown();
      SVal rhs = eval(e->rhs());
      if (interrupted())
        return SVal::unknown();

      bool division = e->binaryOp == BinaryOpKind::Div ||
                      e->binaryOp == BinaryOpKind::Rem;
      if (division) {
        CheckerContext ctx = eng.makeContext(state, frame);
        eng.firePreStmt(ctx, e);
        if (ctx.sinkRequested) {
          sinkHere(e, ctx);
          return SVal::unknown();
        }
        state = std::move(ctx.state);
      }

      SVal result = fold(e->binaryOp, lhs, rhs);
      memo(e, result);
      return result;
    }

    static SVal fold(BinaryOpKind op, const SVal &lhs, const SVal &rhs) {
      if (lhs.isUndefined() || rhs.isUndefined())
        return SVal::undefined();
      if (lhs.isConcrete() && rhs.isConcrete()) {
        auto v = evalConcreteBinOp(lhs.asConcrete(), arithOpFor(op),
                                   rhs.asConcrete());
        // Division by zero with the checker disabled: garbage result.
        return v ? SVal::concrete(*v) : SVal::undefined();
      }
      // $s + k, k + $s, $s - k; everything else is beyond the tracked
      // expression grammar.
      if (op == BinaryOpKind::Add || op == BinaryOpKind::Sub) {
        auto offsetted = [](const SymExpr &s, std::uint64_t k) {
          return SVal::symbolic({s.sym, static_cast<std::int64_t>(
                                            static_cast<std::uint64_t>(s.offset) +
                                            k)});
        };
        if (lhs.isSymbolic() && lhs.asSymbolic().isAtom() && rhs.isConcrete()) {
          std::uint64_t k = static_cast<std::uint64_t>(rhs.asConcrete());
          return offsetted(lhs.asSymbolic(),
                           op == BinaryOpKind::Add ? k : 0 - k);
        }
        if (op == BinaryOpKind::Add && rhs.isSymbolic() &&
            rhs.asSymbolic().isAtom() && lhs.isConcrete())
          return offsetted(rhs.asSymbolic(),
                           static_cast<std::uint64_t>(lhs.asConcrete()));
      }
      return SVal::unknown();
    }

    //===-- loads and stores ----------------------------------------------===

    LValue lvalueOfVar(const AstNode *ref) {
      const AstNode *decl = ref->decl;
      MemRegion slot = MemRegion::var(frame, decl);
      if (decl->kind == AstKind::ParamDecl && decl->byRef) {
        if (const SVal *held = state.lookupStore(slot);
            held && held->isRegion()) {
          const MemRegion &target = held->asRegion();
          return {target.isElement() ? LValue::Kind::Element
                                     : LValue::Kind::Scalar,
                  target, target.decl, target.frame};
        }
        // Top-level by-reference parameter: the slot holds the value itself.
      }
      return {LValue::Kind::Scalar, slot, decl, frame};
    }

    std::optional<LValue> evalLValue(const AstNode *expr) {
      if (expr->kind == AstKind::VarRef)
        return lvalueOfVar(expr);
      assert(expr->kind == AstKind::ArrayIndex);
      const AstNode *base = expr->indexBase();
      SVal idx = eval(expr->indexExpr());
      if (interrupted())
        return std::nullopt;

      CheckerContext ctx = eng.makeContext(state, frame);
      eng.firePreStmt(ctx, expr); // array-bounds hook
      if (ctx.sinkRequested) {
        sinkHere(expr, ctx);
        return std::nullopt;
      }
      state = std::move(ctx.state);

      if (idx.isConcrete())
        return LValue{LValue::Kind::Element,
                      MemRegion::elem(frame, base->decl, idx.asConcrete()),
                      base->decl, frame};
      if (idx.isSymbolic())
        return LValue{LValue::Kind::Element,
                      MemRegion::elem(frame, base->decl, idx.asSymbolic()),
                      base->decl, frame};
      // Index unknowable: treat the whole array as the target.
      return LValue{LValue::Kind::ArrayBlast, MemRegion::var(frame, base->decl),
                    base->decl, frame};
    }

    bool hasSummary(int f, const AstNode *arrayDecl) const {
      return state.lookupStore(MemRegion::var(f, arrayDecl)) != nullptr;
    }

    void arrayBindings(int f, const AstNode *arrayDecl, bool &anyConcrete,
                       bool &anySymbolic) const {
      anyConcrete = anySymbolic = false;
      for (const auto &[region, value] : state.store) {
        (void)value;
        if (region.frame != f || region.decl->id != arrayDecl->id ||
            !region.element)
          continue;
        if (std::holds_alternative<SymExpr>(*region.element))
          anySymbolic = true;
        else
          anyConcrete = true;
      }
    }

    SVal blastReadValue(int f, const AstNode *arrayDecl) const {
      bool anyConcrete, anySymbolic;
      arrayBindings(f, arrayDecl, anyConcrete, anySymbolic);
      if (!anyConcrete && !anySymbolic && !hasSummary(f, arrayDecl))
        return SVal::undefined(); // nothing was ever written anywhere
      return SVal::unknown();
    }

    SVal load(const MemRegion &region) {
      if (!region.isElement()) {
        const SVal *bound = state.lookupStore(region);
        if (!bound)
          return SVal::undefined();
        if (bound->isRegion())
          return load(bound->asRegion()); // chase a reference chain
        return *bound;
      }
      if (const SVal *exact = state.lookupStore(region))
        return *exact;
      bool anyConcrete, anySymbolic;
      arrayBindings(region.frame, region.decl, anyConcrete, anySymbolic);
      bool summary = hasSummary(region.frame, region.decl);
      if (std::holds_alternative<std::int64_t>(*region.element)) {
        if (summary || anySymbolic)
          return SVal::unknown();
        return SVal::undefined(); // distinct concrete cells cannot alias
      }
      if (summary || anyConcrete || anySymbolic)
        return SVal::unknown();
      return SVal::undefined(); // untouched array: every element undefined
    }

    void eraseArrayBindings(int f, const AstNode *arrayDecl,
                            bool symbolicOnly) {
      std::erase_if(state.store, [&](const auto &entry) {
        const MemRegion &region = entry.first;
        if (region.frame != f || region.decl->id != arrayDecl->id ||
            !region.element)
          return false;
        return !symbolicOnly ||
               std::holds_alternative<SymExpr>(*region.element);
      });
    }

    void invalidateArray(int f, const AstNode *arrayDecl) {
      eraseArrayBindings(f, arrayDecl, /*symbolicOnly=*/false);
      state.store[MemRegion::var(f, arrayDecl)] = SVal::unknown();
    }

    void storeTo(const LValue &lv, const SVal &v) {
      switch (lv.kind) {
      case LValue::Kind::Scalar:
        state.store[lv.region] = v;
        break;
      case LValue::Kind::Element:
        if (std::holds_alternative<SymExpr>(*lv.region.element))
          eraseArrayBindings(lv.frame, lv.decl, /*symbolicOnly=*/false);
        else
          eraseArrayBindings(lv.frame, lv.decl, /*symbolicOnly=*/true);
        state.store[lv.region] = v;
        break;
      case LValue::Kind::ArrayBlast:
        invalidateArray(lv.frame, lv.decl);
        break;
      }
    }

    void noteRead(const AstNode *expr, const SVal &v) {
      reads.push_back({expr, v});
      if (!v.isUndefined())
        return;
      CheckerContext ctx = eng.makeContext(state, frame);
      eng.firePostStmt(ctx, expr, {reads.back()});
      if (ctx.sinkRequested) {
        sinkHere(expr, ctx);
        return;
      }
      state = std::move(ctx.state);
    }

    void sinkHere(const AstNode *at, CheckerContext &ctx) {
      ProgramPoint point{ProgramPoint::Kind::PostStmt, frame, at->id, -1};
      ExplodedNode *node =
          eng.makeNode(point, std::move(ctx.state), origin, item, /*sink=*/true);
      eng.attachReports(ctx, node);
      sunk = true;
    }

    //===-- calls -----------------------------------------------------------

    SVal evalCall(const AstNode *call) {
      if (const SVal *hit = state.lookupEnv(frame, call->id))
        return *hit;

      const AstNode *callee = call->decl; // null for intrinsics
      std::vector<AstNode *> params =
          callee ? callee->params() : std::vector<AstNode *>{};
      std::vector<SVal> argVals;
      std::vector<std::optional<LValue>> refArgs(call->children.size());
      for (std::size_t i = 0; i < call->children.size(); ++i) {
        const AstNode *arg = call->children[i];
        if (callee && i < params.size() && params[i]->byRef) {
          auto lv = evalLValue(arg);
          if (interrupted())
            return SVal::unknown();
          refArgs[i] = lv;
          argVals.push_back(lv->kind == LValue::Kind::ArrayBlast
                                ? SVal::unknown()
                                : SVal::region(lv->region));
        } else {
          SVal v = eval(arg);
          if (interrupted())
            return SVal::unknown();
          argVals.push_back(v);
        }
      }

      {
        CheckerContext ctx = eng.makeContext(state, frame);
        eng.firePreCall(ctx, call);
        if (ctx.sinkRequested) {
          sinkHere(call, ctx);
          return SVal::unknown();
        }
        state = std::move(ctx.state);
      }

      if (call->intrinsic != Intrinsic::None)
        return evalIntrinsic(call, argVals);

      bool inlineIt = decideInline(callee, refArgs);
      if (!inlineIt)
        return evalConservative(call, callee, argVals, refArgs);

      // Inline analysis: push a frame bound to the caller's values and
      // regions, then suspend this evaluation until CallExit.
      int calleeFrame = eng.internFrame(callee, call->id, frame);
      ProgramState entryState = state;
      for (std::size_t i = 0; i < params.size(); ++i) {
        MemRegion slot = MemRegion::var(calleeFrame, params[i]);
        if (params[i]->byRef)
          entryState.store[slot] = SVal::region(refArgs[i]->region);
        else
          entryState.store[slot] = argVals[i];
      }
      ++eng.stats_.inlinedCalls;
      eng.inlined_.insert(callee);
      if (static_cast<int>(eng.cfgByFn_.at(callee)->blocks.size()) >=
          eng.opts_.budget.largeCfgBlocks)
        ++eng.largeInlineCount_[callee];
      ProgramPoint point{ProgramPoint::Kind::CallEnter, calleeFrame, call->id,
                         callee->id};
      eng.makeNode(point, std::move(entryState), origin, item);
      suspended = true;
      return SVal::unknown();
    }

    bool decideInline(const AstNode *callee,
                      const std::vector<std::optional<LValue>> &refArgs) {
      if (!callee->hasBody) {
        ++eng.stats_.conservativeCallsNoBody;
        return false;
      }
      for (const auto &lv : refArgs)
        if (lv && lv->kind == LValue::Kind::ArrayBlast)
          return false; // cannot name the target region; stay conservative
      const AnalysisBudget &budget = eng.opts_.budget;
      int blocks =
          static_cast<int>(eng.cfgByFn_.at(callee)->blocks.size());
      bool small = blocks <= budget.smallFnBlocks;
      int depth = eng.frames_[frame].depth;
      if (depth >= budget.maxCallDepth && !small) {
        ++eng.stats_.conservativeCallsDepthLimit;
        return false;
      }
      if (blocks >= budget.largeCfgBlocks &&
          eng.largeInlineCount_[callee] >= budget.maxInlineOfLarge) {
        ++eng.stats_.conservativeCallsLargeCfg;
        return false;
      }
      return true;
    }

    SVal evalIntrinsic(const AstNode *call, const std::vector<SVal> &argVals) {
      SVal result = SVal::unknown();
      switch (call->intrinsic) {
      case Intrinsic::Input:
      case Intrinsic::Open:
        result = SVal::symbolic({eng.conjure("input"), 0});
        break;
      case Intrinsic::Close:
        break;
      case Intrinsic::SaDump:
        printDump(call, argVals[0]);
        break;
      default:
        assert(false);
      }
      CheckerContext ctx = eng.makeContext(state, frame);
      eng.firePostCall(ctx, call, result, argVals);
      if (ctx.sinkRequested) {
        sinkHere(call, ctx);
        return SVal::unknown();
      }
      state = std::move(ctx.state);
      memo(call, result);
      return result;
    }

    SVal evalConservative(const AstNode *call, const AstNode *callee,
                          const std::vector<SVal> &argVals,
                          const std::vector<std::optional<LValue>> &refArgs) {
      // Everything reachable through a by-reference argument may have been
      // written: scalars get fresh unknowns, arrays lose all bindings.
      // Constraints on the old symbols become orphans until collection.
      for (const auto &lv : refArgs) {
        if (!lv)
          continue;
        switch (lv->kind) {
        case LValue::Kind::Scalar:
          state.store[lv->region] = SVal::symbolic({eng.conjure("inv"), 0});
          break;
        case LValue::Kind::Element:
        case LValue::Kind::ArrayBlast:
          invalidateArray(lv->frame, lv->decl);
          break;
        }
      }
      SVal result = callee->returnsValue
                        ? SVal::symbolic({eng.conjure("ret"), 0})
                        : SVal::unknown();
      CheckerContext ctx = eng.makeContext(state, frame);
      eng.firePostCall(ctx, call, result, argVals);
      if (ctx.sinkRequested) {
        sinkHere(call, ctx);
        return SVal::unknown();
      }
      state = std::move(ctx.state);
      memo(call, result);
      return result;
    }

    void printDump(const AstNode *call, const SVal &v) {
      std::string constraints;
      if (v.isConcrete())
        constraints =
            RangeSet::singleton(v.asConcrete()).str();
      else if (v.isSymbolic())
        constraints =
            effectiveRange(state.constraints, v.asSymbolic()).str();
      else if (v.isUndefined())
        constraints = "<undefined>";
      else
        constraints = RangeSet::fullOver(Universe::full()).str();
      eng.out() << "sa_dump @" << call->loc.file << ":" << call->loc.line
                << ": " << v.str(eng.result_.symbols)
                << " ; constraints: " << constraints << "\n";
    }

    //===-- statements ------------------------------------------------------

    /// Runs one element to completion. False when suspended or sunk.
    bool executeElement(const AstNode *element) {
      switch (element->kind) {
      case AstKind::VarDecl:
        if (element->arrayLen) {
          eraseArrayBindings(frame, element, /*symbolicOnly=*/false);
          state.store.erase(MemRegion::var(frame, element));
        } else if (const AstNode *init = element->varInit()) {
          SVal v = eval(init);
          if (interrupted())
            return false;
          state.store[MemRegion::var(frame, element)] = v;
        } else {
          state.store.erase(MemRegion::var(frame, element));
        }
        return true;
      case AstKind::AssignStmt: {
        const AstNode *lhs = element->assignLhs();
        if (lhs->kind == AstKind::VarRef) {
          SVal v = eval(element->assignRhs());
          if (interrupted())
            return false;
          storeTo(lvalueOfVar(lhs), v);
          return true;
        }
        auto lv = evalLValue(lhs); // index first, then the value
        if (interrupted())
          return false;
        SVal v = eval(element->assignRhs());
        if (interrupted())
          return false;
        storeTo(*lv, v);
        return true;
      }
      case AstKind::ExprStmt:
        eval(element->children[0]);
        return !interrupted();
      default:
        assert(false && "not a CFG element");
        return true;
      }
    }
  };

  //===--------------------------------------------------------------------===
  // Node processing
  //===--------------------------------------------------------------------===

  void runTopLevel(const AstNode *fn) {
    frames_.clear();
    frameIndex_.clear();
    largeInlineCount_.clear();
    worklist_.clear();
    rawReports_.clear();
    stopped_ = false;

    result_.topLevels.push_back({fn, {}});
    graph_ = &result_.topLevels.back().graph;

    int frame = internFrame(fn, -1, -1);
    const Cfg &cfg = cfgOf(frame);

    ProgramState init;
    for (const AstNode *param : fn->params()) {
      SymbolId sym = conjure(param->name, /*named=*/true);
      init.store[MemRegion::var(frame, param)] = SVal::symbolic({sym, 0});
    }

    WorkItem rootItem;
    enterBlock(nullptr, rootItem, frame, cfg.entry, std::move(init));

    while (!worklist_.empty() && !stopped_) {
      WorkItem item = std::move(worklist_.back());
      worklist_.pop_back();
      processNode(item);
    }

    finalizeTopLevelReports();
  }

  void enterBlock(const ExplodedNode *pred, const WorkItem &item, int frame,
                  int blockId, ProgramState state) {
    wipeEnv(state, frame);
    const LivenessResult &live = livenessOf(frames_[frame].function);
    collectDead(state, frame, live.liveAtEntry(blockId), live.universe);
    ProgramPoint point{ProgramPoint::Kind::BlockEntrance, frame, blockId, -1};
    makeNode(point, std::move(state), pred, item);
  }

  void processNode(WorkItem &item) {
    const ExplodedNode &node = graph_->node(item.node);
    switch (node.point.kind) {
    case ProgramPoint::Kind::BlockEntrance:
      processBlockEntrance(node, item);
      break;
    case ProgramPoint::Kind::PreStmt: {
      CfgOwner owner = cfgOf(node.point.frame).exprOwner.at(node.point.a);
      runElement(node, item, owner.block, owner.elementIndex, node.state,
                 /*firePre=*/true);
      break;
    }
    case ProgramPoint::Kind::PostStmt:
      advanceAfterElement(node, item);
      break;
    case ProgramPoint::Kind::BranchTaken: {
      const BasicBlock &block = cfgOf(node.point.frame).blocks[node.point.a];
      int target =
          node.point.b ? block.term.trueTarget : block.term.falseTarget;
      enterBlock(&node, item, node.point.frame, target, node.state);
      break;
    }
    case ProgramPoint::Kind::CallEnter: {
      int frame = node.point.frame; // the callee frame
      enterBlock(&node, item, frame, cfgOf(frame).entry, node.state);
      break;
    }
    case ProgramPoint::Kind::CallExit:
      processCallExit(node, item);
      break;
    case ProgramPoint::Kind::EndOfFunction:
      processEndOfFunction(node, item);
      break;
    }
  }

  void processBlockEntrance(const ExplodedNode &node, WorkItem &item) {
    int frame = node.point.frame;
    int blockId = node.point.a;
    int &count = item.blockVisits[{frame, blockId}];
    if (++count > opts_.budget.maxBlockVisits) {
      ++stats_.pathsTerminatedBlockVisits;
      return; // the path ends here, silently
    }
    const Cfg &cfg = cfgOf(frame);
    if (blockId == cfg.exit) {
      ProgramPoint point{ProgramPoint::Kind::EndOfFunction, frame, -1, -1};
      makeNode(point, node.state, &node, item);
      return;
    }
    const BasicBlock &block = cfg.blocks[blockId];
    if (!block.elements.empty()) {
      ProgramPoint point{ProgramPoint::Kind::PreStmt, frame,
                         block.elements[0]->id, -1};
      makeNode(point, node.state, &node, item);
      return;
    }
    processTerminator(node, item, blockId, node.state);
  }

  void runElement(const ExplodedNode &origin, WorkItem &item, int blockId,
                  int elementIndex, ProgramState state, bool firePre) {
    int frame = origin.point.frame;
    const Cfg &cfg = cfgOf(frame);
    const AstNode *element = cfg.blocks[blockId].elements[elementIndex];

    if (firePre) {
      CheckerContext ctx = makeContext(std::move(state), frame);
      firePreStmt(ctx, element);
      if (ctx.sinkRequested) {
        ProgramPoint point{ProgramPoint::Kind::PostStmt, frame, element->id,
                           -1};
        ExplodedNode *sinkNode =
            makeNode(point, std::move(ctx.state), &origin, item, /*sink=*/true);
        attachReports(ctx, sinkNode);
        return;
      }
      state = std::move(ctx.state);
    }

    EvalSession session(*this, item, &origin, frame, std::move(state));
    if (!session.executeElement(element))
      return; // suspended at a call or sunk by a checker

    CheckerContext ctx = makeContext(std::move(session.state), frame);
    firePostStmt(ctx, element, session.reads);
    bool sink = ctx.sinkRequested;
    ProgramState after = std::move(ctx.state);

    wipeEnv(after, frame);
    const LivenessResult &live = livenessOf(frames_[frame].function);
    collectDead(after, frame,
                live.liveAfterElement(cfg, blockId, elementIndex),
                live.universe);
    ProgramPoint point{ProgramPoint::Kind::PostStmt, frame, element->id, -1};
    ExplodedNode *next = makeNode(point, std::move(after), &origin, item, sink);
    attachReports(ctx, next);
  }

  void advanceAfterElement(const ExplodedNode &node, WorkItem &item) {
    int frame = node.point.frame;
    const Cfg &cfg = cfgOf(frame);
    auto ownerIt = cfg.exprOwner.find(node.point.a);
    if (ownerIt == cfg.exprOwner.end()) {
      // PostStmt sink nodes for subexpressions are never advanced (sinks
      // are not queued), so the owner always exists for queued nodes.
      return;
    }
    CfgOwner owner = ownerIt->second;
    const BasicBlock &block = cfg.blocks[owner.block];
    std::size_t next = static_cast<std::size_t>(owner.elementIndex) + 1;
    if (next < block.elements.size()) {
      ProgramPoint point{ProgramPoint::Kind::PreStmt, frame,
                         block.elements[next]->id, -1};
      makeNode(point, node.state, &node, item);
      return;
    }
    processTerminator(node, item, owner.block, node.state);
  }

  void processTerminator(const ExplodedNode &origin, WorkItem &item,
                         int blockId, ProgramState state) {
    int frame = origin.point.frame;
    const Cfg &cfg = cfgOf(frame);
    const BasicBlock &block = cfg.blocks[blockId];
    switch (block.term.kind) {
    case Terminator::Kind::Jump:
      enterBlock(&origin, item, frame, block.term.target, std::move(state));
      return;
    case Terminator::Kind::Return: {
      if (block.term.returnExpr) {
        EvalSession session(*this, item, &origin, frame, std::move(state));
        SVal v = session.eval(block.term.returnExpr);
        if (session.interrupted())
          return;
        session.state.env[{frame, frames_[frame].function->id}] = v;
        enterBlock(&origin, item, frame, cfg.exit, std::move(session.state));
        return;
      }
      enterBlock(&origin, item, frame, cfg.exit, std::move(state));
      return;
    }
    case Terminator::Kind::CondBranch:
      processBranch(origin, item, blockId, std::move(state));
      return;
    case Terminator::Kind::Exit:
      assert(false && "exit blocks are handled at block entrance");
      return;
    }
  }

  void processBranch(const ExplodedNode &origin, WorkItem &item, int blockId,
                     ProgramState state) {
    int frame = origin.point.frame;
    const BasicBlock &block = cfgOf(frame).blocks[blockId];
    const AstNode *cond = block.term.cond;

    EvalSession session(*this, item, &origin, frame, std::move(state));
    SVal v = session.eval(cond);
    if (session.interrupted())
      return;

    CheckerContext ctx = makeContext(std::move(session.state), frame);
    fireBranchCondition(ctx, cond, v);
    if (ctx.sinkRequested) {
      ProgramPoint point{ProgramPoint::Kind::PostStmt, frame, cond->id, -1};
      ExplodedNode *sinkNode =
          makeNode(point, std::move(ctx.state), &origin, item, /*sink=*/true);
      attachReports(ctx, sinkNode);
      return;
    }
    ProgramState st = std::move(ctx.state);

    auto makeArm = [&](bool which, ProgramState armState) {
      ProgramPoint point{ProgramPoint::Kind::BranchTaken, frame, blockId,
                         which ? 1 : 0};
      makeNode(point, std::move(armState), &origin, item);
    };

    if (v.isConcrete()) {
      makeArm(v.asConcrete() != 0, std::move(st));
      return;
    }

    // A comparison of a tracked expression against a constant refines the
    // constraint map on both arms; so does a bare symbolic condition
    // (compared against zero). Infeasible arms are pruned.
    std::optional<SymExpr> se;
    RangeAlgebra::Rel rel = RangeAlgebra::Rel::Ne;
    std::int64_t bound = 0;
    if (cond->kind == AstKind::BinaryOp) {
      if (auto condRel = relFor(cond->binaryOp)) {
        auto valueAt = [&](const AstNode *e) -> std::optional<SVal> {
          if (e->kind == AstKind::IntLit)
            return SVal::concrete(e->intValue);
          if (const SVal *hit = st.lookupEnv(frame, e->id))
            return *hit;
          return std::nullopt;
        };
        auto lv = valueAt(cond->lhs());
        auto rv = valueAt(cond->rhs());
        if (lv && rv) {
          if (lv->isSymbolic() && rv->isConcrete()) {
            se = lv->asSymbolic();
            rel = *condRel;
            bound = rv->asConcrete();
          } else if (rv->isSymbolic() && lv->isConcrete()) {
            se = rv->asSymbolic();
            rel = mirror(*condRel);
            bound = lv->asConcrete();
          }
        }
      }
    }
    if (!se && v.isSymbolic()) {
      se = v.asSymbolic();
      rel = RangeAlgebra::Rel::Ne;
      bound = 0;
    }

    if (!se) { // unknown condition: explore both arms, no new facts
      makeArm(false, st);
      makeArm(true, std::move(st));
      return;
    }

    // False arm first so the depth-first walk explores the true arm first.
    if (auto falseCm = assume(st.constraints, *se, rel, bound, false)) {
      ProgramState armState = st;
      armState.constraints = std::move(*falseCm);
      makeArm(false, std::move(armState));
    }
    if (auto trueCm = assume(st.constraints, *se, rel, bound, true)) {
      ProgramState armState = std::move(st);
      armState.constraints = std::move(*trueCm);
      makeArm(true, std::move(armState));
    }
  }

  void processCallExit(const ExplodedNode &node, WorkItem &item) {
    int frame = node.point.frame; // the caller frame
    int callId = node.point.a;
    const AstNode *call = nodeById_.at(callId);

    ProgramState state = node.state;
    {
      const SVal *retSlot = state.lookupEnv(frame, callId);
      SVal ret = retSlot ? *retSlot : SVal::unknown();
      std::vector<SVal> argVals;
      for (const AstNode *arg : call->children) {
        if (arg->kind == AstKind::IntLit)
          argVals.push_back(SVal::concrete(arg->intValue));
        else if (const SVal *v = state.lookupEnv(frame, arg->id))
          argVals.push_back(*v);
        else
          argVals.push_back(SVal::unknown());
      }
      CheckerContext ctx = makeContext(std::move(state), frame);
      firePostCall(ctx, call, ret, argVals);
      if (ctx.sinkRequested) {
        ProgramPoint point{ProgramPoint::Kind::PostStmt, frame, callId, -1};
        ExplodedNode *sinkNode =
            makeNode(point, std::move(ctx.state), &node, item, /*sink=*/true);
        attachReports(ctx, sinkNode);
        return;
      }
      state = std::move(ctx.state);
    }

    // Resume whatever was being evaluated when the call suspended it.
    CfgOwner owner = cfgOf(frame).exprOwner.at(callId);
    if (owner.terminator)
      processTerminator(node, item, owner.block, std::move(state));
    else
      runElement(node, item, owner.block, owner.elementIndex, std::move(state),
                 /*firePre=*/false);
  }

  void processEndOfFunction(const ExplodedNode &node, WorkItem &item) {
    int frame = node.point.frame;
    const FrameInfo &info = frames_[frame];

    if (info.caller < 0) {
      // Top-level leaf: give checkers their end-of-path shot (leaks).
      CheckerContext ctx = makeContext(node.state, frame);
      fireEndOfPath(ctx);
      if (ctx.sinkRequested)
        graph_->node(node.id).sink = true;
      attachReports(ctx, &node);
      return;
    }

    const AstNode *fn = info.function;
    ProgramState state = node.state;
    SVal ret = SVal::unknown();
    if (fn->returnsValue) {
      const SVal *slot = state.lookupEnv(frame, fn->id);
      ret = slot ? *slot : SVal::undefined(); // fell off the end
    }
    eraseFrame(state, frame);
    state.env[{info.caller, info.callSiteId}] = ret; // resume marker
    sweepConstraints(state);
    ProgramPoint point{ProgramPoint::Kind::CallExit, info.caller,
                       info.callSiteId, -1};
    makeNode(point, std::move(state), &node, item);
  }

  //===--------------------------------------------------------------------===
  // Reports
  //===--------------------------------------------------------------------===

  void finalizeTopLevelReports() {
    for (const RawReport &raw : rawReports_) {
      Report report;
      report.checker = raw.checker;
      report.message = raw.message;
      report.loc = raw.loc;

      std::vector<const ExplodedNode *> chain;
      const ExplodedNode *cur = &graph_->node(raw.node);
      while (true) {
        chain.push_back(cur);
        if (cur->preds.empty())
          break;
        cur = &graph_->node(cur->preds[0]);
      }
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const ProgramPoint &point = (*it)->point;
        switch (point.kind) {
        case ProgramPoint::Kind::BranchTaken: {
          const BasicBlock &block = cfgOf(point.frame).blocks[point.a];
          report.path.push_back({block.term.cond->loc,
                                 point.b ? PathEvent::Kind::BranchTrue
                                         : PathEvent::Kind::BranchFalse,
                                 point.b ? "Taking true branch"
                                         : "Taking false branch"});
          break;
        }
        case ProgramPoint::Kind::CallEnter: {
          const AstNode *call = nodeById_.at(point.a);
          report.path.push_back({call->loc, PathEvent::Kind::CallEnter,
                                 "Calling '" + call->name + "'"});
          break;
        }
        case ProgramPoint::Kind::CallExit: {
          const AstNode *call = nodeById_.at(point.a);
          report.path.push_back({call->loc, PathEvent::Kind::CallExit,
                                 "Returning from '" + call->name + "'"});
          break;
        }
        default:
          break;
        }
      }
      report.path.push_back({report.loc, PathEvent::Kind::Event,
                             report.message});
      finalizeReport(report);
      result_.reports.push_back(std::move(report));
    }
  }

  void dedupReports() {
    std::set<std::uint64_t> seen;
    std::erase_if(result_.reports, [&seen](const Report &r) {
      return !seen.insert(r.hash).second;
    });
  }
};

} // namespace

AnalysisResult analyzeProgram(const AstNode *program,
                              const std::vector<Cfg> &cfgs,
                              const std::vector<Checker *> &checkers,
                              const EngineOptions &options) {
  AnalysisResult result;
  Engine(program, cfgs, checkers, options, result).run();
  return result;
}

std::string dumpExplodedGraphJson(const AnalysisResult &result) {
  using Json = nlohmann::ordered_json;
  Json out = Json::array();
  for (const TopLevelAnalysis &top : result.topLevels) {
    Json fn;
    fn["function"] = top.function->name;
    Json nodes = Json::array();
    Json edges = Json::array();
    for (int i = 0; i < top.graph.size(); ++i) {
      const ExplodedNode &node = top.graph.node(i);
      Json jn;
      jn["id"] = node.id;
      Json point;
      point["kind"] = programPointKindName(node.point.kind);
      point["frame"] = node.point.frame;
      switch (node.point.kind) {
      case ProgramPoint::Kind::BlockEntrance:
      case ProgramPoint::Kind::BranchTaken:
        point["block"] = node.point.a;
        if (node.point.kind == ProgramPoint::Kind::BranchTaken)
          point["taken"] = node.point.b != 0;
        break;
      case ProgramPoint::Kind::PreStmt:
      case ProgramPoint::Kind::PostStmt:
        point["stmt"] = node.point.a;
        break;
      case ProgramPoint::Kind::CallEnter:
        point["call"] = node.point.a;
        point["callee"] = node.point.b;
        break;
      case ProgramPoint::Kind::CallExit:
        point["call"] = node.point.a;
        break;
      case ProgramPoint::Kind::EndOfFunction:
        break;
      }
      jn["point"] = std::move(point);
      jn["sink"] = node.sink;

      Json state;
      Json env = Json::object();
      for (const auto &[key, value] : node.state.env)
        env["f" + std::to_string(key.first) + ":e" +
            std::to_string(key.second)] = value.str(result.symbols);
      state["env"] = std::move(env);
      Json store = Json::object();
      for (const auto &[region, value] : node.state.store)
        store[region.str(result.symbols)] = value.str(result.symbols);
      state["store"] = std::move(store);
      Json constraints = Json::object();
      for (const auto &[sym, ranges] : node.state.constraints)
        constraints[result.symbols.name(sym)] = ranges.str();
      state["constraints"] = std::move(constraints);
      Json gdm = Json::array();
      for (const auto &[key, entry] : node.state.gdm) {
        (void)entry;
        gdm.push_back(key);
      }
      state["gdm"] = std::move(gdm);
      jn["state"] = std::move(state);
      nodes.push_back(std::move(jn));

      for (int succ : node.succs)
        edges.push_back({node.id, succ});
    }
    fn["nodes"] = std::move(nodes);
    fn["edges"] = std::move(edges);
    out.push_back(std::move(fn));
  }
  return out.dump(2) + "\n";
}

} // namespace minisa
