#pragma once

#include "laxcenter/cospan.hpp"
#include "laxcenter/report.hpp"

#include <string>
#include <vector>

namespace laxcenter {

/// intro, matrix or dkr. Unknown names raise InputError.
Report run_example(const std::string& name);
std::vector<std::string> example_names();

enum class SuiteTarget { morita, cospan };

struct SuiteOptions {
  SuiteTarget target = SuiteTarget::morita;
  WordSampling sampling;
};

/// Lax unity for every hom and lax associativity for every consecutive
/// triple. One or two homs are extended by identities on the last target.
/// Non-composable chains raise InputError.
Report verify_chain(const std::vector<RingHom>& homs, const SuiteOptions& opts,
                    const std::string& command);

/// The same checks over `triples` seeded composable triples of the corpus.
Report verify_corpus(std::size_t triples, const SuiteOptions& opts, const std::string& command);

Report describe_center(const RingRef& r, const std::string& command);
Report describe_centralizer(const RingHom& f, const std::string& command);

}  // namespace laxcenter
