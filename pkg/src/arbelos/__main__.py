#!/usr/bin/env python3

from arbelos.cli import run

run()
