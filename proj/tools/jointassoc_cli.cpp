// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "jointassoc/commands.hpp"

int main(int argc, char** argv) { return jointassoc::run_cli(argc, argv, std::cout, std::cerr); }
