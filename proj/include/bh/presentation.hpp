#pragma once

#include <string>
#include <vector>

#include "bh/error.hpp"

namespace bh {

// Topological type of the base: closed genus-g surface with k branch points.
struct Signature {
    int genus = 0;
    int branch_count = 0;

    int num_generators() const { return 2 * genus + branch_count; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

// Generator ids: a_1,b_1,...,a_g,b_g come first (a_i at 2(i-1), b_i at 2i-1),
// then c_1,...,c_k. 1-based branch index i maps to generator id 2g+i-1.
int gen_a(const Signature& sig, int i);
int gen_b(const Signature& sig, int i);
int gen_c(const Signature& sig, int i);
bool is_branch_generator(const Signature& sig, int gen_id);
std::string generator_name(const Signature& sig, int gen_id);

// A freely reduced word over the generators and their formal inverses.
// Letters are nonzero ints: +(gen_id+1) for a generator, -(gen_id+1) for its
// inverse.
struct GroupWord {
    std::vector<int> letters;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    bool empty() const { return letters.empty(); }
};

GroupWord reduce(GroupWord w);
GroupWord concat(const GroupWord& u, const GroupWord& v);
GroupWord inverse(const GroupWord& w);
GroupWord letter_word(int gen_id, bool inv = false);

std::string word_to_string(const GroupWord& w, const Signature& sig);
// Tokens "a1", "B2", "c3", ...; uppercase = inverse; whitespace optional.
GroupWord parse_word(const std::string& text, const Signature& sig);

// [a_1,b_1]...[a_g,b_g] c_1...c_k with [x,y] = x y x^-1 y^-1
GroupWord relator(const Signature& sig);

// A substitution rule gen |-> word, extending to an endomorphism of the free
// group; invertibility is certified by a paired inverse in the generator set.
struct Automorphism {
    Signature sig;
    std::vector<GroupWord> sub; // indexed by generator id
    std::string label;
};

Automorphism identity_automorphism(const Signature& sig);
GroupWord apply_automorphism(const Automorphism& f, const GroupWord& w);
// apply(compose(f,g), w) == apply(f, apply(g, w))
Automorphism compose(const Automorphism& f, const Automorphism& g);
bool is_identity_on_generators(const Automorphism& f);

// true iff f(relator) is conjugate to the relator in the free group
// (cyclic reductions are rotations of each other)
bool relator_preserved(const Automorphism& f, const Signature& sig);

// Half-twist generators for the genus-0 base: sigma_i maps
// c_i |-> c_i c_{i+1} c_i^-1, c_{i+1} |-> c_i. Returns sigma_1..sigma_{k-1}
// followed by their inverses. Positive genus is not supported here; callers
// must supply their own automorphism set.
std::vector<Automorphism> braid_generators(const Signature& sig);

// Set sanity gate: every element preserves the relator and has an inverse in
// the set. Throws on failure.
void check_generator_set(const std::vector<Automorphism>& gens, const Signature& sig);

} // namespace bh
