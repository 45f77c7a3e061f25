#include "gw/correlators.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "gw/virasoro.hpp"

namespace gw {

void InvKey::canonicalize() { std::sort(ins.begin(), ins.end()); }
void AuxKey::canonicalize() { std::sort(extras.begin(), extras.end()); }

std::optional<Rat> Cache::find_inv(const InvKey& k) const {
    auto it = inv_.find(k);
    if (it == inv_.end()) return std::nullopt;
    return it->second;
}
std::optional<Rat> Cache::find_aux(const AuxKey& k) const {
    auto it = aux_.find(k);
    if (it == aux_.end()) return std::nullopt;
    return it->second;
}
void Cache::insert_inv(const InvKey& k, const Rat& v) {
    auto [it, fresh] = inv_.emplace(k, v);
    if (!fresh && it->second != v) throw std::logic_error("cache: conflicting value for invariant key");
}
void Cache::insert_aux(const AuxKey& k, const Rat& v) {
    auto [it, fresh] = aux_.emplace(k, v);
    if (!fresh && it->second != v) throw std::logic_error("cache: conflicting value for aux key");
}

namespace {

std::string ins_str(const std::vector<Insertion>& ins) {
    std::string s;
    for (size_t i = 0; i < ins.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ins[i].m) + ':' + std::to_string(ins[i].a);
    }
    return s;
}

long parse_int(const std::string& s, long line) {
    size_t pos = 0;
    long v;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("cache parse error at line " + std::to_string(line) + ": bad integer '" + s + "'");
    }
    if (pos != s.size()) throw std::runtime_error("cache parse error at line " + std::to_string(line) + ": bad integer '" + s + "'");
    return v;
}

Insertion parse_insertion(const std::string& tok, long line) {
    size_t colon = tok.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("cache parse error at line " + std::to_string(line) + ": bad insertion '" + tok + "'");
    return {parse_int(tok.substr(0, colon), line), static_cast<ClassIndex>(parse_int(tok.substr(colon + 1), line))};
}

std::vector<Insertion> parse_insertions(const std::string& field, long line) {
    std::vector<Insertion> out;
    if (field.empty()) return out;
    std::stringstream ss(field);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_insertion(tok, line));
    return out;
}

Rat parse_value(const std::string& s, long line) {
    try {
        return rat_parse(s);
    } catch (const std::exception&) {
        throw std::runtime_error("cache parse error at line " + std::to_string(line) + ": bad rational '" + s + "'");
    }
}

std::vector<std::string> split_fields(const std::string& s) {
    std::vector<std::string> f;
    std::string cur;
    for (char c : s) {
        if (c == '|') {
            f.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    f.push_back(cur);
    return f;
}

} // namespace

void Cache::save(std::ostream& out) const {
    for (const auto& [k, v] : inv_)
        out << k.r << '|' << k.g << '|' << k.d << '|' << ins_str(k.ins) << '|' << rat_str(v) << '\n';
    for (const auto& [k, v] : aux_) {
        if (!k.extras.empty()) continue; // persisted records are two-entry
        out << "aux|" << k.r << '|' << k.i << '|' << k.first.m << ':' << k.first.a << '|' << k.second << '|' << k.e
            << '|' << rat_str(v) << '\n';
    }
}

void Cache::load(std::istream& in) {
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> f = split_fields(line);
        if (!f.empty() && f[0] == "aux") {
            if (f.size() != 7)
                throw std::runtime_error("cache parse error at line " + std::to_string(lineno) + ": expected 7 fields");
            AuxKey k;
            k.r = static_cast<int>(parse_int(f[1], lineno));
            k.i = parse_int(f[2], lineno);
            k.first = parse_insertion(f[3], lineno);
            k.second = static_cast<ClassIndex>(parse_int(f[4], lineno));
            k.e = parse_int(f[5], lineno);
            insert_aux(k, parse_value(f[6], lineno));
        } else {
            if (f.size() != 5)
                throw std::runtime_error("cache parse error at line " + std::to_string(lineno) + ": expected 5 fields");
            InvKey k;
            k.r = static_cast<int>(parse_int(f[0], lineno));
            k.g = static_cast<int>(parse_int(f[1], lineno));
            k.d = parse_int(f[2], lineno);
            k.ins = parse_insertions(f[3], lineno);
            k.canonicalize();
            insert_inv(k, parse_value(f[4], lineno));
        }
    }
}

std::optional<Rat> Engine::convention_value(const InvKey& key) const {
    long n = static_cast<long>(key.ins.size());
    if (key.g == 0 && key.d == 0) {
        if (n == 1) return key.ins[0].m == -2 && key.ins[0].a == key.r ? Rat(1) : Rat(0);
        if (n == 2) {
            const Insertion &i1 = key.ins[0], &i2 = key.ins[1];
            if (i1.m + i2.m != -1) return Rat(0);
            long mx = std::max(i1.m, i2.m);
            Rat sign = (mx % 2 == 0) ? Rat(1) : Rat(-1);
            return sign * pairing(key.r, i1.a, i2.a);
        }
        if (n == 0) return Rat(0);
        // n >= 3: genus-0 degree-0 multinomial formula (consistent extension
        // of the convention; also the genuine stable value).
        long sm = 0, sa = 0;
        for (const auto& i : key.ins) {
            if (i.m < 0) return Rat(0);
            sm += i.m;
            sa += i.a;
        }
        if (sm != n - 3 || sa != key.r) return Rat(0);
        Rat v = factorial(n - 3);
        for (const auto& i : key.ins) v /= factorial(i.m);
        return v;
    }
    for (const auto& i : key.ins)
        if (i.m < 0) return Rat(0);
    return std::nullopt;
}

Genus0Engine& Engine::genus0(int r) {
    auto& slot = g0_[r];
    if (!slot) slot = std::make_unique<Genus0Engine>(r, verify_);
    return *slot;
}

bool Engine::family_solved(const Context& ctx) const {
    return solved_.count({ctx.r, ctx.g, ctx.tail}) > 0;
}
void Engine::mark_family_solved(const Context& ctx) { solved_.insert({ctx.r, ctx.g, ctx.tail}); }

Rat Engine::invariant(InvKey key) {
    if (key.r < 1) throw std::invalid_argument("invariant: r must be >= 1");
    if (key.g < 0) throw std::invalid_argument("invariant: negative genus");
    for (const auto& i : key.ins)
        if (i.a < 0 || i.a > key.r) throw std::invalid_argument("invariant: class index out of range");
    key.canonicalize();

    if (key.d < 0) return Rat(0);
    if (auto cv = convention_value(key)) return *cv;

    long n = static_cast<long>(key.ins.size());
    long dim = 0;
    for (const auto& i : key.ins) dim += i.m + i.a;
    if (dim != (key.r + 1) * key.d + (key.r - 3) * (1 - key.g) + n) return Rat(0);

    if (key.g == 0) {
        ++stats_.genus0_queries;
        return genus0(key.r).descendant(key.d, key.ins);
    }

    if (auto hit = cache_.find_inv(key)) return *hit;

    if (key.ins.empty()) {
        // No free insertion to anchor a family; recover from the dilaton
        // equation <tau_1(T_0) ...>_{g,d} = (2g-2) <...>_{g,d} when possible.
        if (key.g >= 2) {
            InvKey raised = key;
            raised.ins.push_back({1, 0});
            Rat v = invariant(std::move(raised)) / Rat(2 * key.g - 2);
            cache_.insert_inv(key, v);
            return v;
        }
        throw std::domain_error("invariant: genus-1 invariant without insertions is not determined");
    }

    Insertion free = key.ins.back();
    Context ctx{key.r, key.g, std::vector<Insertion>(key.ins.begin(), key.ins.end() - 1)};
    long N = 3 * key.g - 1;

    if (free.m < N) {
        solve_family(*this, ctx);
        auto hit = cache_.find_inv(key);
        if (!hit) throw std::logic_error("invariant: family solve did not produce the requested slot");
        return *hit;
    }
    Rat v = evaluate_unknown(*this, ctx, free.m);
    cache_.insert_inv(key, v);
    return v;
}

Rat Engine::aux(AuxKey key) {
    key.canonicalize();
    if (key.e < 0) return Rat(0);
    if (key.second < 0 || key.second > key.r) throw std::invalid_argument("aux: class index out of range");
    if (key.i < 0) throw std::invalid_argument("aux: negative level");

    if (key.extras.empty()) {
        if (auto hit = cache_.find_aux(key)) return *hit;
    }
    if (auto it = aux_memo_.find(key); it != aux_memo_.end()) return it->second;
    ++stats_.aux_evals;

    Rat v(0);
    if (key.i == 0) {
        InvKey inv{key.r, 0, key.e, key.extras};
        inv.ins.push_back(key.first);
        inv.ins.push_back({0, key.second});
        v = invariant(std::move(inv));
    } else {
        AuxKey up = key;
        up.i = key.i - 1;
        ++up.first.m;
        v = aux(std::move(up));
        for_each_split(key.extras, [&](const std::vector<Insertion>& E1, const std::vector<Insertion>& E2, const Rat& mult) {
            for (int c = 0; c <= key.r; ++c) {
                for (long e1 = 0; e1 <= key.e; ++e1) {
                    InvKey f1{key.r, 0, e1, E1};
                    f1.ins.push_back(key.first);
                    f1.ins.push_back({0, static_cast<ClassIndex>(c)});
                    Rat a1 = invariant(std::move(f1));
                    if (a1 == 0) continue;
                    AuxKey f2{key.r, key.i - 1, {0, static_cast<ClassIndex>(key.r - c)}, key.second, key.e - e1, E2};
                    v -= mult * a1 * aux(std::move(f2));
                }
            }
        });
    }
    aux_memo_.emplace(key, v);
    if (key.extras.empty()) cache_.insert_aux(key, v);
    return v;
}

} // namespace gw
