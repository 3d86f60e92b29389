// Run one catalog case end to end: build the claim polynomials, certify
// every rectangle, serialize the certificate to JSON, and re-verify it with
// the independent checker (including a deliberately corrupted copy).

#include <cstdio>

#include "kitecert/certificate.hpp"
#include "kitecert/checker.hpp"
#include "kitecert/prove.hpp"

using namespace kitecert;

int main() {
  const CaseCertificate cc = prove_case("S2");
  std::printf("case %s (%s): %s, %zu claim(s)\n", cc.case_id.c_str(),
              cc.strategy.c_str(), cc.certified ? "certified" : "FAILED",
              cc.claims.size());
  for (const Claim& c : cc.claims) {
    const TreeStats s = tree_stats(c.tree);
    std::printf("  %-12s leaves=%-3lld depth=%d\n", c.name.c_str(),
                s.fold_leaves, s.max_depth);
  }

  // Round-trip through JSON and re-check every leaf bound from scratch.
  Json j = certificate_to_json(cc);
  const CheckReport ok = check_certificate(j);
  std::printf("checker on the emitted certificate: %s (%d leaves)\n",
              ok.certified ? "accepted" : "rejected", ok.leaves_checked);

  // Corrupt one leaf bound; the checker must refuse the certificate.
  Json* node = &j["claims"][0]["tree"];
  while (!node->contains("bound")) node = &(*node)["children"][0];
  (*node)["bound"] = "-1/3";
  const CheckReport bad = check_certificate(j);
  std::printf("checker on a mutated leaf bound:    %s\n",
              bad.certified ? "ACCEPTED (bug!)" : "rejected");
  for (const CheckIssue& i : bad.issues)
    std::printf("  issue [%s]: %s\n", i.claim.c_str(), i.detail.c_str());

  return 0;
}
