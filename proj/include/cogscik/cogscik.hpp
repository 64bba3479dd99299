// Copyright 2026 The cogscik authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COGSCIK_COGSCIK_HPP
#define COGSCIK_COGSCIK_HPP

#include "cogscik/catalog.hpp"
#include "cogscik/cluster.hpp"
#include "cogscik/io_space.hpp"
#include "cogscik/kernel.hpp"
#include "cogscik/kmeans.hpp"
#include "cogscik/rng.hpp"
#include "cogscik/simulation.hpp"

#endif  // COGSCIK_COGSCIK_HPP
