#!/usr/bin/env python3
"""Sleeps forever; used to exercise the timeout path."""
import time
time.sleep(3600)
