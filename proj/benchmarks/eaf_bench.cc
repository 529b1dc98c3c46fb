#include <benchmark/benchmark.h>

#include <vector>

#include "eaf/navigation.h"
#include "eaf/replay.h"
#include "eaf/serialization.h"
#include "eaf/session.h"
#include "generator.h"

namespace {

eaf::Workspace Sized(int blocks) {
  eaf::testing::GenOptions options;
  options.min_stacks = 4;
  options.max_stacks = 4;
  options.max_blocks = blocks;
  return eaf::testing::GenerateWorkspace(7, options);
}

void BM_Move(benchmark::State& state) {
  eaf::Workspace ws = Sized(static_cast<int>(state.range(0)));
  std::vector<eaf::CursorLocation> stops;
  for (const auto& location : eaf::ReachableSet(ws)) stops.push_back(location);
  constexpr eaf::Direction kDirections[] = {
      eaf::Direction::kUp, eaf::Direction::kDown, eaf::Direction::kLeft,
      eaf::Direction::kRight, eaf::Direction::kIn, eaf::Direction::kOut};
  size_t i = 0;
  for (auto _ : state) {
    eaf::CursorLocation at = stops[i % stops.size()];
    auto result = eaf::Move(ws, at, kDirections[i % 6]);
    benchmark::DoNotOptimize(result);
    ++i;
  }
}
BENCHMARK(BM_Move)->Arg(30)->Arg(120);

void BM_ReachableSet(benchmark::State& state) {
  eaf::Workspace ws = Sized(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eaf::ReachableSet(ws));
}
BENCHMARK(BM_ReachableSet)->Arg(30)->Arg(120);

void BM_SaveLoad(benchmark::State& state) {
  eaf::Workspace ws = Sized(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto loaded = eaf::LoadWorkspace(eaf::SaveWorkspace(ws));
    benchmark::DoNotOptimize(loaded);
  }
}
BENCHMARK(BM_SaveLoad)->Arg(30)->Arg(120);

void BM_Replay(benchmark::State& state) {
  eaf::Workspace ws = Sized(60);
  auto script = eaf::ParseScript("Alt+A\nF\nD\nF\nS\nS\nQ\nE\nCtrl+C\nCtrl+V\nE\nC\n");
  for (auto _ : state) {
    eaf::Session session(ws);
    benchmark::DoNotOptimize(eaf::Replay(session, *script));
  }
}
BENCHMARK(BM_Replay);

}  // namespace

BENCHMARK_MAIN();
