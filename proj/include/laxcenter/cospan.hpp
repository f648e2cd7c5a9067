#pragma once

#include "laxcenter/check.hpp"
#include "laxcenter/morita.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace laxcenter {

/// left_foot -> apex <- right_foot.
struct Cospan {
  RingHom left_leg;
  RingHom right_leg;

  const RingRef& left_foot() const { return left_leg.source(); }
  const RingRef& right_foot() const { return right_leg.source(); }
  const RingRef& apex() const { return left_leg.target(); }
};

/// Throws InputError when the legs do not share a target.
Cospan make_cospan(RingHom left_leg, RingHom right_leg);

struct CospanMorphism {
  RingHom left_map;
  RingHom right_map;
  RingHom apex_map;
};

/// Both squares apex_map o leg == leg' o foot_map, on foot bases.
ValidationReport check_cospan_morphism(const Cospan& from, const Cospan& to,
                                       const CospanMorphism& m);

/// Cospan of unit orbits r |-> 1.r and s |-> s.1 of a bimodule whose carrier
/// is `ring` (same moduli, no extra relations). The left foot is the right
/// acting ring. Throws AxiomError when the actions are not multiplication by
/// central images of the unit, or the legs are not ring maps.
Cospan orbit_cospan(const Bimodule& m, const RingRef& ring);

/// Z(R) -> Z(f) <- Z(S) with legs r |-> f(r) and the inclusion.
Cospan center_cospan(const CentralizerData& d);
Cospan center_cospan(const RingHom& f);

/// Symbolic composite of cospans: the apexes left to right, each adjacent
/// pair glued along a shared foot. Nothing is computed in the pushout itself.
struct FormalPushout {
  struct Gluing {
    RingHom into_left;   // Y -> apexes[i]
    RingHom into_right;  // Y -> apexes[i + 1]
  };
  std::vector<RingRef> apexes;
  std::vector<Gluing> gluings;
  RingHom left_leg;
  RingHom right_leg;
  std::string bracketing;
};

FormalPushout formal_of(const Cospan& c);
/// Composite of c1 then c2 (c1's right foot must equal c2's left foot).
FormalPushout compose_formal(const FormalPushout& p1, const FormalPushout& p2);
FormalPushout compose_formal(const Cospan& c1, const Cospan& c2);

/// Letter of a word in a formal pushout: an element of apexes[tag].
struct Letter {
  std::size_t tag = 0;
  Vec coeffs;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct PushoutWord {
  std::vector<Letter> letters;
  friend bool operator==(const PushoutWord&, const PushoutWord&) = default;
};

PushoutWord unit_word(const FormalPushout& p);
/// Merges adjacent letters with equal tags and drops unit letters, until
/// stable. The empty result becomes the unit word.
PushoutWord word_reduce(const FormalPushout& p, const PushoutWord& w);
bool is_reduced(const FormalPushout& p, const PushoutWord& w);
std::string format_word(const FormalPushout& p, const PushoutWord& w);

/// One hom per apex into a common target.
struct Cocone {
  RingRef target;
  std::vector<RingHom> legs;
};

/// Legs agree on every gluing foot, checked on foot bases.
ValidationReport check_cocone(const FormalPushout& p, const Cocone& c);
RingElement evaluate_word(const PushoutWord& w, const Cocone& c);

/// phi for f then g: Z(g) coprod_{Z(S)} Z(f) -> Z(g o f) given by s |-> g(s)
/// on Z(f) and t |-> t on Z(g), with identities on Z(R) and Z(T).
struct CospanCompositor {
  Cospan lower;      // Z(f)
  Cospan upper;      // Z(g)
  Cospan composite;  // Z(g o f)
  FormalPushout pushout;
  Cocone cocone;
  RingHom left_map;   // id on Z(R)
  RingHom right_map;  // id on Z(T)
};

CospanCompositor compositor_phi(const CentralizerData& lower, const CentralizerData& upper,
                                const CentralizerData& composite);
CospanCompositor compositor_phi(const RingHom& f, const RingHom& g);
/// Agreement on Z(S) and both squares over the feet.
CheckList check_compositor_phi(const CospanCompositor& c);

/// s (s'.r) == (s.r) s' on generator triples of Z(f).
ValidationReport check_orbit_compatibility(const CentralizerData& d);

struct WordSampling {
  std::size_t word_len = 4;
  std::size_t samples = 200;
  std::uint64_t seed = 42;
};

/// Alternating words of length <= word_len over the apexes, letters drawn
/// from generators and sums of two generators.
std::vector<PushoutWord> sample_words(const FormalPushout& p, const WordSampling& s);

CheckList verify_lax_cospan_unity(const RingHom& f, const WordSampling& s);
CheckList verify_lax_cospan_associativity(const CenterChain& chain, const WordSampling& s);
CheckList verify_lax_cospan(const RingHom& f, const RingHom& g, const RingHom& h, LaxMode mode,
                            const WordSampling& s);

}  // namespace laxcenter
