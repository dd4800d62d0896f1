#pragma once

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

namespace quadrex {

using Rng = std::mt19937_64;

struct ZkpKeys {
  mpz_class p, q, n;
  mpz_class I;  // identification number
  mpz_class c;  // odd suffix appended to the digits of I
  mpz_class w;  // residue of both p and q
  mpz_class u;  // u^2 == w mod n, the prover's secret
};

// Public part seen by the verifier.
struct ZkpPublic {
  mpz_class n, w;
};

inline ZkpPublic public_part(const ZkpKeys& k) { return {k.n, k.w}; }

// Digits of I followed by the digits of c.
mpz_class concatenate_digits(const mpz_class& I, const mpz_class& c);

// p, q distinct primes == 3 mod 4; searches odd c in [1, c_limit].
ZkpKeys keys_from_primes(const mpz_class& p, const mpz_class& q, const mpz_class& I, unsigned long c_limit = 1000000);
ZkpKeys keygen(unsigned prime_bits, const mpz_class& I, Rng& rng, unsigned long c_limit = 1000000);

// Uniform-ish value in [0, bound) drawn from 64-bit words of rng.
mpz_class random_below(const mpz_class& bound, Rng& rng);

struct Commitment {
  mpz_class x, y;
  mpz_class r;  // kept by the prover
};

Commitment prover_commit(const ZkpKeys& keys, Rng& rng);
// x == r^2, y == w / x (mod n)
Commitment commit_with(const ZkpKeys& keys, const mpz_class& r);
int verifier_challenge(Rng& rng);
mpz_class prover_respond(const ZkpKeys& keys, const mpz_class& r, int bit);
bool verifier_check(const mpz_class& x, const mpz_class& y, int bit, const mpz_class& response, const ZkpPublic& pub);

struct RoundRecord {
  int round = 0;
  mpz_class x, y;
  int b = 0;
  mpz_class response;
  bool ok = false;
};

enum class SessionStatus { Running, Accepted, Rejected };

struct ZkpSession {
  std::vector<RoundRecord> rounds;
  SessionStatus status = SessionStatus::Running;

  // one JSON object per round: {round, x, y, b, response, ok}
  std::string transcript_jsonl() const;
};

// Stops at the first failed round.
ZkpSession honest_session(const ZkpKeys& keys, int rounds, Rng& rng);

// Prover without u: before each round it guesses the challenge bit and
// prepares (x, y) so that exactly that branch can be answered.
ZkpSession impostor_session(const ZkpPublic& pub, int rounds, Rng& rng);
bool impostor_accepted(const ZkpPublic& pub, int rounds, Rng& rng);

}  // namespace quadrex
