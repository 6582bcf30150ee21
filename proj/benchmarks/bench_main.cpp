#include <benchmark/benchmark.h>

// Defined here rather than linking benchmark_main, whose packaged archive
// carries LTO bytecode tied to a specific compiler build.
BENCHMARK_MAIN();
