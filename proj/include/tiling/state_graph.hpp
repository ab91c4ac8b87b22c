#pragma once

#include <vector>

namespace tiling {

// Successor lists over nodes 0..n-1.
using Succ = std::vector<std::vector<int>>;

// Nodes from which an infinite forward walk exists.
std::vector<bool> infinite_from(const Succ& succ);

// Simple cycles, each listed from its least node; stops after `cap`
// cycles and sets *truncated.
std::vector<std::vector<int>> simple_cycles(const Succ& succ, int cap, bool* truncated);

}  // namespace tiling
