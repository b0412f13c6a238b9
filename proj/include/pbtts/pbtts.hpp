// Copyright 2026 The pbtts Authors
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

#pragma once

#include "pbtts/engine.hpp"
#include "pbtts/error.hpp"
#include "pbtts/g2p.hpp"
#include "pbtts/lexicon.hpp"
#include "pbtts/prosody.hpp"
#include "pbtts/speak.hpp"
#include "pbtts/synth.hpp"
#include "pbtts/text.hpp"
#include "pbtts/translator.hpp"
#include "pbtts/utf8.hpp"
#include "pbtts/voice.hpp"
#include "pbtts/wav.hpp"
