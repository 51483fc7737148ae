// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Framelab Contributors

#include "framelab/run.hpp"

int main(int argc, char** argv) { return framelab::run_cli(argc, argv); }
