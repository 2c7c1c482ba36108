#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"

namespace dlab {

// One manifest entry of the shipped corpus.
struct CorpusEntry {
    std::string path;
    bool expect_class_g = false;
    std::vector<std::string> expect_kinds; // configuration kinds (with optional :case suffix)
    std::string golden_ledger;             // path relative to corpus dir, may be empty
    std::string host_kind;                 // set on certification hosts
    std::string host_case;
    int enumeration_bound = 14;
};

std::vector<CorpusEntry> load_manifest(const std::string& corpus_dir);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AcceptanceReport {
    std::vector<CriterionResult> criteria;
    bool all_pass() const {
        for (const auto& c : criteria)
            if (!c.pass) return false;
        return !criteria.empty();
    }
};

// Runs the nine acceptance criteria against the shipped corpus. Parallelism
// is capped by DISCHARGE_LAB_THREADS.
AcceptanceReport run_acceptance(const std::string& corpus_dir);

// Small worklist helper shared by the batch subcommands.
void parallel_for(int n, const std::function<void(int)>& fn);
int thread_cap();

} // namespace dlab
