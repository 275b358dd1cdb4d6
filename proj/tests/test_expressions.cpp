// Singular expressions: evaluation, forward paths, the four reducedness
// criteria, and the constructive producers (some_rex, roads, extensions,
// embeddings).
//
// The criteria are implemented along different routes (a lengths-add
// certificate, Williamson's step-local test, the alternating-chain test,
// and the length count), so the main safety net here is enumerating every
// expression of bounded width in small types and insisting all four agree.

#include "doctest.h"

#include <functional>
#include <set>

#include "scox/expression.h"

using namespace scox;

namespace {

System a2() { return System(CoxeterMatrix::from_entries({{1, 3}, {3, 1}}), {"s", "t"}); }
System b2() { return System(CoxeterMatrix::from_entries({{1, 4}, {4, 1}}), {"s", "t"}); }
System a3() {
  return System(CoxeterMatrix::from_entries({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}),
                {"s", "t", "u"});
}

Expression chain(std::initializer_list<GenSet> subsets) {
  return from_subsets(std::vector<GenSet>(subsets));
}

// All expressions of width <= max_width, every finitary start.
void for_all_expressions(const System& sys, int max_width,
                         const std::function<void(const Expression&)>& f) {
  std::function<void(Expression&, GenSet, int)> go = [&](Expression& e, GenSet I,
                                                         int left) {
    f(e);
    if (left == 0) return;
    for (int s = 0; s < sys.rank(); ++s) {
      bool up = !I.contains(s);
      GenSet next = up ? I.plus(s) : I.minus(s);
      if (up && !sys.is_finitary(next)) continue;
      e.steps.push_back({up, s});
      go(e, next, left - 1);
      e.steps.pop_back();
    }
  };
  for (uint32_t b = 0; b < (1u << sys.rank()); ++b) {
    GenSet start(b);
    if (!sys.is_finitary(start)) continue;
    Expression e;
    e.start = start;
    go(e, start, max_width);
  }
}

std::vector<Expression> reduced_expressions(const System& sys, int max_width) {
  std::vector<Expression> out;
  for_all_expressions(sys, max_width, [&](const Expression& e) {
    if (is_reduced(sys, e)) out.push_back(e);
  });
  return out;
}

std::vector<Element> group_elements(const System& sys) {
  std::vector<Element> out{sys.identity()};
  std::set<Element> seen{sys.identity()};
  for (size_t i = 0; i < out.size(); ++i)
    for (int s = 0; s < sys.rank(); ++s) {
      Element next = sys.mul(out[i], s);
      if (seen.insert(next).second) out.push_back(next);
    }
  return out;
}

std::vector<Coset> all_cosets(const System& sys) {
  std::vector<Element> elts = group_elements(sys);
  std::set<Coset> seen;
  for (uint32_t jb = 0; jb < (1u << sys.rank()); ++jb)
    for (uint32_t ib = 0; ib < (1u << sys.rank()); ++ib)
      for (const Element& w : elts)
        seen.insert(coset_of(sys, GenSet(jb), w, GenSet(ib)));
  return {seen.begin(), seen.end()};
}

} // namespace

TEST_CASE("expression validation and subset chains") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};

  Expression e = chain({none, S, ST, S, none});
  CHECK(e.width() == 4);
  CHECK(e.start == none);
  CHECK(e.end() == none);
  CHECK(e.steps == std::vector<Step>{{true, 0}, {true, 1}, {false, 1}, {false, 0}});
  CHECK(e.subsets() == std::vector<GenSet>{none, S, ST, S, none});
  CHECK_NOTHROW(validate(sys, e));

  Expression zero;
  zero.start = ST;
  CHECK(zero.width() == 0);
  CHECK_NOTHROW(validate(sys, zero));

  Expression bad_add{S, {{true, 0}}};
  CHECK_THROWS_AS(validate(sys, bad_add), std::invalid_argument);
  Expression bad_remove{S, {{false, 1}}};
  CHECK_THROWS_AS(validate(sys, bad_remove), std::invalid_argument);
  Expression bad_gen{S, {{true, 7}}};
  CHECK_THROWS_AS(validate(sys, bad_gen), std::invalid_argument);
  CHECK_THROWS_AS(from_subsets({none, ST}), std::invalid_argument);
  CHECK_THROWS_AS(from_subsets({S, S}), std::invalid_argument);
}

TEST_CASE("evaluation of the basic examples") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};
  Element s = sys.generator(0), t = sys.generator(1);
  Element sts = sys.mul(sys.mul(s, t), s);

  Coset p = evaluate(sys, chain({none, S, none}));
  CHECK(p.left == none);
  CHECK(p.right == none);
  CHECK(p.min == s);
  CHECK(p.max == s);

  Coset q = evaluate(sys, chain({none, S, ST, S, none}));
  CHECK(q.min == sts);
  CHECK(q.max == sts);

  // [s, 0, s] climbs back into the identity coset: nothing was gained.
  CHECK(evaluate(sys, chain({S, none, S})) == identity_coset(sys, S));

  Expression zero;
  zero.start = ST;
  CHECK(evaluate(sys, zero) == identity_coset(sys, ST));

  // In A3, [[st, stu, tu]] expands to a coset of the longest element.
  System s3 = a3();
  MultistepExpression m{{GenSet{0, 1}, GenSet{0, 1, 2}, GenSet{1, 2}}};
  Coset w = evaluate(s3, multistep_to_singlestep(s3, m));
  CHECK(w.left == GenSet{0, 1});
  CHECK(w.right == GenSet{1, 2});
  CHECK(w.max == s3.longest(s3.full_set()));
  CHECK(s3.length(w.min) == 3); // W_{st} w_0, so the floor sits at height 3
}

TEST_CASE("forward paths and their redundancy sequences") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};

  // [s, 0, s, st, t, 0, s] — the running example with redundancy sequence
  // ({s}, 0, {s}, {s}, {s}, 0, 0).
  Expression e = chain({S, none, S, ST, T, none, S});
  ForwardPath path = forward_path(sys, e);
  REQUIRE(path.cosets.size() == 7);
  CHECK(path.redundancy ==
        std::vector<GenSet>{S, none, S, S, S, none, none});
  for (const Coset& p : path.cosets) CHECK(p.left == S);
  CHECK(path.cosets.back() == evaluate(sys, e));

  // Each prefix of the path evaluates to the path's coset.
  for_all_expressions(sys, 5, [&](const Expression& f) {
    ForwardPath fp = forward_path(sys, f);
    CHECK(fp.cosets.back() == evaluate(sys, f));
  });
}

TEST_CASE("the four reducedness criteria agree on every small expression") {
  for (auto make : {a2, b2}) {
    System sys = make();
    int max_width = sys.bond(0, 1) == 3 ? 6 : 5;
    int reduced_count = 0, total = 0;
    for_all_expressions(sys, max_width, [&](const Expression& e) {
      ++total;
      bool cert = is_reduced(sys, e);
      bool will = is_reduced_williamson(sys, e);
      bool multi = is_reduced_multistep(sys, singlestep_to_multistep(sys, e));
      ExprLengths el = expr_lengths(sys, e);
      Coset p = evaluate(sys, e);
      CosetLengths cl = coset_lengths(sys, p);
      bool by_length = el.total == cl.total;
      CHECK(el.total >= cl.total);
      CHECK(cert == will);
      CHECK(cert == multi);
      CHECK(cert == by_length);
      if (cert) {
        ++reduced_count;
        // For reduced expressions the up/down split matches the coset's.
        CHECK(el.plus == cl.plus);
        CHECK(el.minus == cl.minus);
        // The certificate's product is then the coset maximum.
        CHECK(reducedness_certificate(sys, e).a0 == p.max);
      }
    });
    CHECK(reduced_count > 0);
    CHECK(reduced_count < total);
  }

  // The named examples.
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};
  CHECK(is_reduced(sys, chain({none, S, none, T, none, S, none})));
  CHECK_FALSE(is_reduced(sys, chain({none, S, none, T, ST})));
  CHECK_FALSE(is_reduced(sys, chain({S, none, S})));

  System s3 = a3();
  GenSet s{0}, su{0, 2}, st{0, 1};
  CHECK(is_reduced(s3, chain({st, s, su, s, st})));
}

TEST_CASE("certificate centers are interchangeable") {
  // a_k built with the split at any center k is the same element, and the
  // lengths-add verdicts coincide.
  System sys = b2();
  for_all_expressions(sys, 4, [&](const Expression& e) {
    ReducednessCertificate cert = reducedness_certificate(sys, e);
    std::vector<GenSet> I = e.subsets();
    int d = e.width();
    for (int k = 0; k <= d; ++k) {
      Element ak = sys.identity();
      int expected = 0;
      for (int i = 0; i < k; ++i) {
        ak = sys.mul(ak, cert.y[i]);
        expected += sys.length(cert.y[i]);
      }
      ak = sys.mul(ak, sys.longest(I[k]));
      expected += sys.longest_length(I[k]);
      for (int i = k; i < d; ++i) {
        ak = sys.mul(ak, cert.z[i]);
        expected += sys.length(cert.z[i]);
      }
      CHECK(ak == cert.a0);
      CHECK((sys.length(ak) == expected) == cert.lengths_add);
    }
  });
}

TEST_CASE("Williamson's criterion localizes failures") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};

  // [s, 0, t, st]: fine until the final +s raises the redundancy.
  Expression e = chain({S, none, T, ST});
  CHECK(reduced_at(sys, e, 0));
  CHECK(reduced_at(sys, e, 1));
  CHECK_FALSE(reduced_at(sys, e, 2));

  // [s, 0, s]: the climb back up is the bad step (K jumps from 0 to {s}).
  Expression back = chain({S, none, S});
  ForwardPath path = forward_path(sys, back);
  CHECK(path.redundancy == std::vector<GenSet>{S, none, S});
  CHECK(reduced_at(sys, back, 0));
  CHECK_FALSE(reduced_at(sys, back, 1));

  // Down-steps are always reduced.
  for_all_expressions(sys, 5, [&](const Expression& f) {
    for (int i = 0; i < f.width(); ++i)
      if (!f.steps[i].up) CHECK(reduced_at(sys, f, i));
  });

  CHECK_THROWS_AS(reduced_at(sys, e, 3), std::out_of_range);
}

TEST_CASE("expression lengths") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};

  ExprLengths l = expr_lengths(sys, chain({none, S, none}));
  CHECK(l.plus == 1);
  CHECK(l.minus == 1);
  CHECK(l.total == 2);

  System s3 = a3();
  GenSet s{0}, su{0, 2}, st{0, 1};
  ExprLengths road = expr_lengths(s3, chain({st, s, su, s, st}));
  CHECK(road.plus == 3);
  CHECK(road.minus == 3);
  CHECK(road.total == 6);
}

TEST_CASE("reverse mirrors the expression onto the inverse coset") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};
  CHECK(reverse(chain({none, S, ST})) == chain({ST, S, none}));

  for_all_expressions(sys, 5, [&](const Expression& e) {
    Expression r = reverse(e);
    CHECK_NOTHROW(validate(sys, r));
    CHECK(r.start == e.end());
    CHECK(r.end() == e.start);
    Coset p = evaluate(sys, e), q = evaluate(sys, r);
    CHECK(q.left == p.right);
    CHECK(q.right == p.left);
    CHECK(q.max == sys.inverse(p.max));
    CHECK(q.min == sys.inverse(p.min));
    CHECK(is_reduced(sys, r) == is_reduced(sys, e));
    ExprLengths le = expr_lengths(sys, e), lr = expr_lengths(sys, r);
    CHECK(lr.plus == le.minus);
    CHECK(lr.minus == le.plus);
    CHECK(reverse(r) == e);
  });
}

TEST_CASE("concatenation and the junction criterion") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};

  CHECK(concat(chain({none, S}), chain({S, none})) == chain({none, S, none}));
  CHECK_THROWS_AS(concat(chain({none, S}), chain({T, none})), std::invalid_argument);
  CHECK_THROWS_AS(concat_is_reduced(sys, chain({none, S}), chain({T, none})),
                  std::invalid_argument);

  // For reduced pieces the junction criterion decides the concatenation.
  std::vector<Expression> reds = reduced_expressions(sys, 3);
  for (const Expression& x : reds)
    for (const Expression& y : reds) {
      if (x.end() != y.start) continue;
      CHECK(concat_is_reduced(sys, x, y) == is_reduced(sys, concat(x, y)));
    }
}

TEST_CASE("multistep expressions expand and regroup") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};

  // [[0, st, 0]] expands with ascending additions and descending removals.
  MultistepExpression m{{none, ST, none}};
  CHECK(multistep_to_singlestep(sys, m) == chain({none, S, ST, S, none}));

  MultistepExpression width0{{S}};
  CHECK(multistep_to_singlestep(sys, width0).width() == 0);
  CHECK(singlestep_to_multistep(sys, Expression{S, {}}).chain == std::vector<GenSet>{S});

  CHECK_THROWS_AS(validate_multistep(sys, MultistepExpression{{S, T}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_multistep(sys, MultistepExpression{{S, none, S}}),
                  std::invalid_argument);

  // Round trips: regrouping the expansion recovers a strictly alternating
  // chain, and both directions preserve the coset and reducedness.
  MultistepExpression strict{{S, ST, none, T, T}};
  Expression flat = multistep_to_singlestep(sys, strict);
  CHECK(singlestep_to_multistep(sys, flat).chain == strict.chain);

  for_all_expressions(sys, 5, [&](const Expression& e) {
    MultistepExpression grouped = singlestep_to_multistep(sys, e);
    Expression back = multistep_to_singlestep(sys, grouped);
    CHECK(evaluate(sys, back) == evaluate(sys, e));
    CHECK(is_reduced(sys, back) == is_reduced(sys, e));
    CHECK(is_reduced_multistep(sys, grouped) == is_reduced(sys, e));
  });
}

TEST_CASE("some_rex produces a deterministic reduced expression") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};
  Element s = sys.generator(0), t = sys.generator(1);
  Element sts = sys.mul(sys.mul(s, t), s);

  CHECK(some_rex(sys, identity_coset(sys, ST)).width() == 0);

  // The greedy backward construction lands on [0, t, st, s, 0] for {sts}.
  Coset p = coset_of(sys, none, sts, none);
  CHECK(some_rex(sys, p) == chain({none, T, ST, S, none}));

  // In A3 the (st, st)-coset of the longest element gets the short rex
  // through the full set, [st, stu, st].
  System s3 = a3();
  GenSet st{0, 1}, stu{0, 1, 2};
  Coset w = coset_of(s3, st, s3.longest(stu), st);
  CHECK(some_rex(s3, w) == chain({st, stu, st}));

  for (auto make : {a2, b2, a3}) {
    System g = make();
    for (const Coset& c : all_cosets(g)) {
      Expression e = some_rex(g, c);
      CHECK(e.start == c.left);
      CHECK(e.end() == c.right);
      CHECK(is_reduced(g, e));
      CHECK(evaluate(g, e) == c);
      CHECK(expr_lengths(g, e).total == coset_lengths(g, c).total);
    }
  }
}

TEST_CASE("high road and low road") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};
  Element s = sys.generator(0), t = sys.generator(1);
  Element sts = sys.mul(sys.mul(s, t), s);

  CHECK(high_road(sys, coset_of(sys, none, sts, none)) ==
        chain({none, S, ST, T, none}));
  CHECK(high_road(sys, coset_of(sys, none, sts, ST)) == chain({none, S, ST}));
  CHECK(low_road(sys, coset_of(sys, S, sys.identity(), none)) == chain({S, none}));

  System s3 = a3();
  GenSet st{0, 1}, ss{0}, su{0, 2};
  Coset w = coset_of(s3, st, s3.longest(s3.full_set()), st);
  CHECK(low_road(s3, w) == chain({st, ss, su, ss, st}));

  for (auto make : {a2, b2, a3}) {
    System g = make();
    for (const Coset& c : all_cosets(g)) {
      for (const Expression& e : {high_road(g, c), low_road(g, c)}) {
        CHECK(e.start == c.left);
        CHECK(e.end() == c.right);
        CHECK(is_reduced(g, e));
        CHECK(evaluate(g, e) == c);
      }
    }
  }
}

TEST_CASE("extending a reduced expression to the longest element") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};

  CHECK(extend_to_longest(sys, chain({none, S, none}), none) ==
        chain({none, S, none, T, none, S, none}));
  CHECK_THROWS_AS(extend_to_longest(sys, chain({none, S, none}), T),
                  std::domain_error);
  CHECK_THROWS_AS(extend_to_longest(sys, chain({S, none, S}), none),
                  std::invalid_argument); // not reduced

  // From the bare identity expression [s], the extension through the whole
  // group is the single up-leg [s, st].
  CHECK(extend_to_longest(sys, Expression{S, {}}, ST) == chain({S, ST}));

  // The extension exists exactly when K' sits inside the right descents of
  // w_J max^{-1} w_S, and then the result is reduced and reaches a coset
  // containing the longest element.
  for (auto make : {a2, b2}) {
    System g = make();
    Element w0 = g.longest(g.full_set());
    for (const Expression& e : reduced_expressions(g, 4)) {
      Coset p = evaluate(g, e);
      Element w = g.mul(g.longest(p.right), g.mul(g.inverse(p.max), w0));
      GenSet K = g.right_descents(w);
      for (uint32_t kb = 0; kb < (1u << g.rank()); ++kb) {
        GenSet Kprime(kb);
        if (!K.contains(Kprime)) {
          CHECK_THROWS_AS(extend_to_longest(g, e, Kprime), std::domain_error);
          continue;
        }
        Expression ext = extend_to_longest(g, e, Kprime);
        CHECK(is_reduced(g, ext));
        CHECK(ext.steps.size() >= e.steps.size());
        CHECK(std::equal(e.steps.begin(), e.steps.end(), ext.steps.begin()));
        CHECK(evaluate(g, ext) == coset_of(g, e.start, w0, Kprime));
      }
    }
  }
}

TEST_CASE("iota and kappa embeddings") {
  System sys = a2();
  GenSet none, S{0}, T{1}, ST{0, 1};

  CHECK(iota_embed(chain({S, ST, T})) == chain({none, S, ST, T}));
  CHECK(kappa_embed(chain({none, S, ST})) == chain({none, S, ST, S, none}));
  CHECK(kappa_embed(chain({none, S, ST}), {0, 1}) == chain({none, S, ST, T, none}));
  CHECK(iota_embed(chain({ST, T}), {1, 0}) == chain({none, T, ST, T}));
  CHECK_THROWS_AS(iota_embed(chain({ST, T}), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(kappa_embed(chain({none, S}), {1}), std::invalid_argument);

  // Embeddings preserve reducedness, and forward-path maxima agree where
  // the paths overlap.
  for_all_expressions(sys, 4, [&](const Expression& e) {
    Expression io = iota_embed(e), ka = kappa_embed(e);
    CHECK_NOTHROW(validate(sys, io));
    CHECK_NOTHROW(validate(sys, ka));
    CHECK(is_reduced(sys, io) == is_reduced(sys, e));
    CHECK(is_reduced(sys, ka) == is_reduced(sys, e));
    ForwardPath pe = forward_path(sys, e);
    ForwardPath pio = forward_path(sys, io);
    size_t off = e.start.size();
    for (size_t i = 0; i < pe.cosets.size(); ++i)
      CHECK(pio.cosets[i + off].max == pe.cosets[i].max);
    ForwardPath pka = forward_path(sys, ka);
    for (size_t i = 0; i < pe.cosets.size(); ++i)
      CHECK(pka.cosets[i].max == pe.cosets[i].max);
  });
}

TEST_CASE("locality: subwords of reduced expressions are reduced") {
  for (auto make : {a2, b2}) {
    System sys = make();
    for (const Expression& e : reduced_expressions(sys, 5)) {
      std::vector<GenSet> I = e.subsets();
      for (int i = 0; i <= e.width(); ++i)
        for (int j = i; j <= e.width(); ++j) {
          Expression sub;
          sub.start = I[i];
          sub.steps.assign(e.steps.begin() + i, e.steps.begin() + j);
          CHECK(is_reduced(sys, sub));

          // Substituting another rex of the same segment keeps the whole
          // expression reduced with the same value.
          Expression mid = some_rex(sys, evaluate(sys, sub));
          Expression swapped;
          swapped.start = e.start;
          swapped.steps.assign(e.steps.begin(), e.steps.begin() + i);
          swapped.steps.insert(swapped.steps.end(), mid.steps.begin(), mid.steps.end());
          swapped.steps.insert(swapped.steps.end(), e.steps.begin() + j, e.steps.end());
          CHECK_NOTHROW(validate(sys, swapped));
          CHECK(is_reduced(sys, swapped));
          CHECK(evaluate(sys, swapped) == evaluate(sys, e));
        }
    }
  }
}

TEST_CASE("going in and going out") {
  System sys = b2();
  for (const Expression& e : reduced_expressions(sys, 5)) {
    if (e.width() == 0) continue;
    Expression tail;
    std::vector<GenSet> I = e.subsets();
    tail.start = I[1];
    tail.steps.assign(e.steps.begin() + 1, e.steps.end());
    ForwardPath pe = forward_path(sys, e);
    ForwardPath pt = forward_path(sys, tail);

    if (e.steps.front().up) {
      // Dropping an initial up-step leaves every later maximum alone.
      for (size_t i = 0; i < pt.cosets.size(); ++i)
        CHECK(pt.cosets[i].max == pe.cosets[i + 1].max);
    } else {
      // Dropping an initial down-step costs the fixed prefix w_{I_0} w_{I_1}^{-1}
      // on every maximum and keeps the redundancies.
      Element shift = sys.mul(sys.longest(I[0]), sys.inverse(sys.longest(I[1])));
      for (size_t i = 0; i < pt.cosets.size(); ++i) {
        CHECK(sys.mul(shift, pt.cosets[i].max) == pe.cosets[i + 1].max);
        CHECK(pt.redundancy[i] == pe.redundancy[i + 1]);
      }
    }

    // Dropping a final down-step truncates the path unchanged.
    if (!e.steps.back().up) {
      Expression head;
      head.start = e.start;
      head.steps.assign(e.steps.begin(), e.steps.end() - 1);
      CHECK(is_reduced(sys, head));
      ForwardPath ph = forward_path(sys, head);
      for (size_t i = 0; i < ph.cosets.size(); ++i)
        CHECK(ph.cosets[i] == pe.cosets[i]);
    }
  }
}

TEST_CASE("addability of two generators") {
  // e*[I, Is, Ist] is reduced exactly when both one-step additions are.
  System sys = a3();
  for (const Expression& e : reduced_expressions(sys, 3)) {
    GenSet I = e.end();
    for (int s = 0; s < sys.rank(); ++s) {
      if (I.contains(s)) continue;
      for (int t = s + 1; t < sys.rank(); ++t) {
        if (I.contains(t)) continue;
        Expression both = e, add_s = e, add_t = e, both_rev = e;
        both.steps.push_back({true, s});
        both.steps.push_back({true, t});
        both_rev.steps.push_back({true, t});
        both_rev.steps.push_back({true, s});
        add_s.steps.push_back({true, s});
        add_t.steps.push_back({true, t});
        bool lhs = is_reduced(sys, both);
        CHECK(lhs == is_reduced(sys, both_rev));
        CHECK(lhs == (is_reduced(sys, add_s) && is_reduced(sys, add_t)));
      }
    }
  }
}

TEST_CASE("expressions respect product decompositions") {
  System base = a2();
  System prod(CoxeterMatrix::from_entries({{1, 3, 2}, {3, 1, 2}, {2, 2, 1}}),
              {"s", "t", "r"});
  GenSet R{2};

  for_all_expressions(base, 4, [&](const Expression& e) {
    Expression lifted;
    lifted.start = e.start | R;
    lifted.steps = e.steps;
    CHECK_NOTHROW(validate(prod, lifted));
    CHECK(is_reduced(prod, lifted) == is_reduced(base, e));
    CHECK(evaluate(prod, lifted) ==
          plus_J(prod, base, evaluate(base, e), R));
  });
}
