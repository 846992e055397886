#include "bh/presentation.hpp"

#include <algorithm>
#include <cctype>

namespace bh {

int gen_a(const Signature& sig, int i) {
    if (i < 1 || i > sig.genus) throw Error(errc::index_out_of_range, "a-generator index");
    return 2 * (i - 1);
}

int gen_b(const Signature& sig, int i) {
    if (i < 1 || i > sig.genus) throw Error(errc::index_out_of_range, "b-generator index");
    return 2 * i - 1;
}

int gen_c(const Signature& sig, int i) {
    if (i < 1 || i > sig.branch_count) throw Error(errc::index_out_of_range, "c-generator index");
    return 2 * sig.genus + i - 1;
}

bool is_branch_generator(const Signature& sig, int gen_id) {
    return gen_id >= 2 * sig.genus && gen_id < sig.num_generators();
}

std::string generator_name(const Signature& sig, int gen_id) {
    if (gen_id < 0 || gen_id >= sig.num_generators())
        throw Error(errc::index_out_of_range, "generator id");
    if (gen_id < 2 * sig.genus) {
        int i = gen_id / 2 + 1;
        return (gen_id % 2 == 0 ? "a" : "b") + std::to_string(i);
    }
    return "c" + std::to_string(gen_id - 2 * sig.genus + 1);
}

GroupWord reduce(GroupWord w) {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int x : w.letters) {
        if (x == 0) throw Error(errc::bad_input, "zero letter in word");
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    w.letters = std::move(out);
    return w;
}

GroupWord concat(const GroupWord& u, const GroupWord& v) {
    GroupWord w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return reduce(std::move(w));
}

GroupWord inverse(const GroupWord& w) {
    GroupWord r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

GroupWord letter_word(int gen_id, bool inv) {
    GroupWord w;
    w.letters.push_back(inv ? -(gen_id + 1) : gen_id + 1);
    return w;
}

std::string word_to_string(const GroupWord& w, const Signature& sig) {
    std::string s;
    for (int x : w.letters) {
        int id = std::abs(x) - 1;
        std::string name = generator_name(sig, id);
        if (x < 0) name[0] = static_cast<char>(std::toupper(name[0]));
        if (!s.empty()) s += " ";
        s += name;
    }
    return s;
}

GroupWord parse_word(const std::string& text, const Signature& sig) {
    GroupWord w;
    size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        char letter = text[pos];
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
        bool inv = std::isupper(static_cast<unsigned char>(letter)) != 0;
        if (lower != 'a' && lower != 'b' && lower != 'c')
            throw Error(errc::alphabet_mismatch, std::string("unexpected character '") + letter + "' in word");
        ++pos;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw Error(errc::alphabet_mismatch, "generator token missing index");
        int idx = std::stoi(text.substr(start, pos - start));
        int gen_id;
        if (lower == 'c') {
            if (idx < 1 || idx > sig.branch_count)
                throw Error(errc::alphabet_mismatch, "c-index out of range for signature");
            gen_id = gen_c(sig, idx);
        } else {
            if (idx < 1 || idx > sig.genus)
                throw Error(errc::alphabet_mismatch, "handle index out of range for signature");
            gen_id = lower == 'a' ? gen_a(sig, idx) : gen_b(sig, idx);
        }
        w.letters.push_back(inv ? -(gen_id + 1) : gen_id + 1);
    }
    return reduce(std::move(w));
}

GroupWord relator(const Signature& sig) {
    GroupWord w;
    for (int i = 1; i <= sig.genus; ++i) {
        int a = gen_a(sig, i) + 1, b = gen_b(sig, i) + 1;
        w.letters.push_back(a);
        w.letters.push_back(b);
        w.letters.push_back(-a);
        w.letters.push_back(-b);
    }
    for (int i = 1; i <= sig.branch_count; ++i) w.letters.push_back(gen_c(sig, i) + 1);
    return reduce(std::move(w));
}

Automorphism identity_automorphism(const Signature& sig) {
    Automorphism f;
    f.sig = sig;
    f.label = "id";
    f.sub.reserve(static_cast<size_t>(sig.num_generators()));
    for (int t = 0; t < sig.num_generators(); ++t) f.sub.push_back(letter_word(t));
    return f;
}

GroupWord apply_automorphism(const Automorphism& f, const GroupWord& w) {
    GroupWord out;
    for (int x : w.letters) {
        int id = std::abs(x) - 1;
        if (id >= static_cast<int>(f.sub.size()))
            throw Error(errc::alphabet_mismatch, "word letter outside the automorphism alphabet");
        const GroupWord& image = f.sub[static_cast<size_t>(id)];
        if (x > 0)
            out.letters.insert(out.letters.end(), image.letters.begin(), image.letters.end());
        else {
            GroupWord vi = inverse(image);
            out.letters.insert(out.letters.end(), vi.letters.begin(), vi.letters.end());
        }
    }
    return reduce(std::move(out));
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    if (!(f.sig == g.sig)) throw Error(errc::alphabet_mismatch, "composing automorphisms over different signatures");
    Automorphism h;
    h.sig = f.sig;
    h.label = f.label + "*" + g.label;
    h.sub.reserve(g.sub.size());
    for (const GroupWord& w : g.sub) h.sub.push_back(apply_automorphism(f, w));
    return h;
}

bool is_identity_on_generators(const Automorphism& f) {
    for (int t = 0; t < static_cast<int>(f.sub.size()); ++t)
        if (!(f.sub[static_cast<size_t>(t)] == letter_word(t))) return false;
    return true;
}

namespace {

// cyclic reduction: strip matching inverse letters from the two ends
GroupWord cyclic_reduce(GroupWord w) {
    w = reduce(std::move(w));
    size_t lo = 0, hi = w.letters.size();
    while (hi - lo >= 2 && w.letters[lo] == -w.letters[hi - 1]) {
        ++lo;
        --hi;
    }
    GroupWord out;
    out.letters.assign(w.letters.begin() + static_cast<long>(lo), w.letters.begin() + static_cast<long>(hi));
    return out;
}

bool is_rotation(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size()) return false;
    if (u.empty()) return true;
    std::vector<int> uu = u;
    uu.insert(uu.end(), u.begin(), u.end());
    return std::search(uu.begin(), uu.end(), v.begin(), v.end()) != uu.end();
}

} // namespace

bool relator_preserved(const Automorphism& f, const Signature& sig) {
    if (static_cast<int>(f.sub.size()) != sig.num_generators()) return false;
    GroupWord r = cyclic_reduce(relator(sig));
    GroupWord fr = cyclic_reduce(apply_automorphism(f, relator(sig)));
    return is_rotation(r.letters, fr.letters);
}

std::vector<Automorphism> braid_generators(const Signature& sig) {
    if (sig.genus != 0)
        throw Error(errc::unsupported_signature,
                    "built-in braid generators exist only for genus 0; supply a custom automorphism set");
    if (sig.branch_count < 2)
        throw Error(errc::unsupported_signature, "braid generators need at least two branch points");
    std::vector<Automorphism> gens;
    int k = sig.branch_count;
    for (int i = 1; i < k; ++i) {
        Automorphism s = identity_automorphism(sig);
        s.label = "sigma_" + std::to_string(i);
        int ci = gen_c(sig, i), cj = gen_c(sig, i + 1);
        GroupWord w; // c_i c_{i+1} c_i^-1
        w.letters = {ci + 1, cj + 1, -(ci + 1)};
        s.sub[static_cast<size_t>(ci)] = w;
        s.sub[static_cast<size_t>(cj)] = letter_word(ci);
        gens.push_back(std::move(s));
    }
    for (int i = 1; i < k; ++i) {
        Automorphism s = identity_automorphism(sig);
        s.label = "sigma_" + std::to_string(i) + "^-1";
        int ci = gen_c(sig, i), cj = gen_c(sig, i + 1);
        GroupWord w; // c_{i+1}^-1 c_i c_{i+1}
        w.letters = {-(cj + 1), ci + 1, cj + 1};
        s.sub[static_cast<size_t>(ci)] = letter_word(cj);
        s.sub[static_cast<size_t>(cj)] = w;
        gens.push_back(std::move(s));
    }
    return gens;
}

void check_generator_set(const std::vector<Automorphism>& gens, const Signature& sig) {
    for (const Automorphism& f : gens)
        if (!relator_preserved(f, sig))
            throw Error(errc::relator_not_preserved, "automorphism '" + f.label + "' does not preserve the relator");
    for (const Automorphism& f : gens) {
        bool has_inverse = false;
        for (const Automorphism& g : gens) {
            if (is_identity_on_generators(compose(f, g)) && is_identity_on_generators(compose(g, f))) {
                has_inverse = true;
                break;
            }
        }
        if (!has_inverse)
            throw Error(errc::not_closed_under_inverses,
                        "automorphism set lacks an inverse for '" + f.label + "'");
    }
}

} // namespace bh
