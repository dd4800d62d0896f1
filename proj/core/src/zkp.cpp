#include "quadrex/zkp.hpp"

#include <cstdint>

#include "json.hpp"
#include "quadrex/arith.hpp"
#include "quadrex/errors.hpp"
#include "quadrex/symbols.hpp"

namespace quadrex {

namespace {

mpz_class reduce(const mpz_class& a, const mpz_class& n) {
  mpz_class r = a % n;
  if (r < 0) r += n;
  return r;
}

bool is_prime_3mod4(const mpz_class& p) {
  return p > 2 && mpz_class(p % 4) == 3 && primality(p) != Primality::Composite;
}

mpz_class random_prime_3mod4(unsigned bits, Rng& rng) {
  for (;;) {
    mpz_class c = random_below(mpz_class(1) << bits, rng);
    mpz_setbit(c.get_mpz_t(), bits - 1);
    c |= 3;
    if (is_prime_3mod4(c)) return c;
  }
}

mpz_class unit_below(const mpz_class& n, Rng& rng) {
  for (;;) {
    mpz_class r = random_below(n, rng);
    if (r != 0 && gcd(r, n) == 1) return r;
  }
}

}  // namespace

mpz_class concatenate_digits(const mpz_class& I, const mpz_class& c) {
  if (I < 0 || c < 0) throw Error(Errc::InvalidArgument, "digits need nonnegative integers");
  return mpz_class(I.get_str() + c.get_str());
}

mpz_class random_below(const mpz_class& bound, Rng& rng) {
  if (bound <= 0) throw Error(Errc::InvalidArgument, "bound must be positive");
  const std::size_t words = mpz_sizeinbase(bound.get_mpz_t(), 2) / 64 + 2;
  std::vector<std::uint64_t> buf(words);
  for (auto& w : buf) w = rng();
  mpz_class v;
  mpz_import(v.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, buf.data());
  return v % bound;
}

ZkpKeys keys_from_primes(const mpz_class& p, const mpz_class& q, const mpz_class& I, unsigned long c_limit) {
  if (!is_prime_3mod4(p) || !is_prime_3mod4(q)) throw Error(Errc::InvalidArgument, "p and q must be primes congruent to 3 mod 4");
  if (p == q) throw Error(Errc::InvalidArgument, "p and q must differ");
  ZkpKeys k;
  k.p = p;
  k.q = q;
  k.n = p * q;
  k.I = I;
  for (unsigned long c = 1; c <= c_limit; c += 2) {
    mpz_class w = concatenate_digits(I, c);
    if (legendre_fast(w, p) != 1 || legendre_fast(w, q) != 1) continue;
    k.c = c;
    k.w = w;
    mpz_class up = mod_pow(w, (p + 1) / 4, p);
    mpz_class uq = mod_pow(w, (q + 1) / 4, q);
    k.u = crt(std::vector<BigCongruence>{{up, p}, {uq, q}}).residue;
    if (reduce(k.u * k.u - w, k.n) != 0 || gcd(k.u, k.n) != 1)
      throw Error(Errc::ConditionViolated, "square root of w failed to verify");
    return k;
  }
  throw Error(Errc::BudgetExceeded, "no suffix c makes w a residue of both primes");
}

ZkpKeys keygen(unsigned prime_bits, const mpz_class& I, Rng& rng, unsigned long c_limit) {
  if (prime_bits < 16) throw Error(Errc::InvalidArgument, "prime_bits must be at least 16");
  mpz_class p = random_prime_3mod4(prime_bits, rng);
  mpz_class q;
  do q = random_prime_3mod4(prime_bits, rng);
  while (q == p);
  return keys_from_primes(p, q, I, c_limit);
}

Commitment commit_with(const ZkpKeys& keys, const mpz_class& r) {
  if (gcd(r, keys.n) != 1) throw Error(Errc::NotCoprime, "r must be a unit mod n");
  Commitment c;
  c.r = reduce(r, keys.n);
  c.x = c.r * c.r % keys.n;
  c.y = reduce(keys.w * mod_inverse(c.x, keys.n), keys.n);
  return c;
}

Commitment prover_commit(const ZkpKeys& keys, Rng& rng) { return commit_with(keys, unit_below(keys.n, rng)); }

int verifier_challenge(Rng& rng) { return static_cast<int>(rng() >> 63); }

mpz_class prover_respond(const ZkpKeys& keys, const mpz_class& r, int bit) {
  if (bit == 0) return r;
  return reduce(keys.u * mod_inverse(r, keys.n), keys.n);
}

bool verifier_check(const mpz_class& x, const mpz_class& y, int bit, const mpz_class& response, const ZkpPublic& pub) {
  if (x < 0 || x >= pub.n || y < 0 || y >= pub.n) return false;
  if (response < 0 || response >= pub.n) return false;
  if (reduce(x * y - pub.w, pub.n) != 0) return false;
  const mpz_class sq = response * response % pub.n;
  if (bit == 0) return sq == x;
  if (bit == 1) return sq == y;
  return false;
}

std::string ZkpSession::transcript_jsonl() const {
  std::string out;
  for (const auto& r : rounds) {
    nlohmann::ordered_json j;
    j["round"] = std::to_string(r.round);
    j["x"] = r.x.get_str();
    j["y"] = r.y.get_str();
    j["b"] = std::to_string(r.b);
    j["response"] = r.response.get_str();
    j["ok"] = r.ok;
    out += j.dump();
    out += '\n';
  }
  return out;
}

ZkpSession honest_session(const ZkpKeys& keys, int rounds, Rng& rng) {
  ZkpSession s;
  const ZkpPublic pub = public_part(keys);
  for (int i = 1; i <= rounds; ++i) {
    Commitment c = prover_commit(keys, rng);
    int b = verifier_challenge(rng);
    mpz_class resp = prover_respond(keys, c.r, b);
    bool ok = verifier_check(c.x, c.y, b, resp, pub);
    s.rounds.push_back({i, c.x, c.y, b, resp, ok});
    if (!ok) {
      s.status = SessionStatus::Rejected;
      return s;
    }
  }
  s.status = SessionStatus::Accepted;
  return s;
}

ZkpSession impostor_session(const ZkpPublic& pub, int rounds, Rng& rng) {
  ZkpSession s;
  for (int i = 1; i <= rounds; ++i) {
    int guess = verifier_challenge(rng);
    mpz_class v = unit_below(pub.n, rng);
    mpz_class x, y;
    if (guess == 0) {
      x = v * v % pub.n;
      y = reduce(pub.w * mod_inverse(x, pub.n), pub.n);
    } else {
      y = v * v % pub.n;
      x = reduce(pub.w * mod_inverse(y, pub.n), pub.n);
    }
    int b = verifier_challenge(rng);
    // v answers the guessed branch; the other branch would need a root of w
    bool ok = verifier_check(x, y, b, v, pub);
    s.rounds.push_back({i, x, y, b, v, ok});
    if (!ok) {
      s.status = SessionStatus::Rejected;
      return s;
    }
  }
  s.status = SessionStatus::Accepted;
  return s;
}

bool impostor_accepted(const ZkpPublic& pub, int rounds, Rng& rng) {
  return impostor_session(pub, rounds, rng).status == SessionStatus::Accepted;
}

}  // namespace quadrex
