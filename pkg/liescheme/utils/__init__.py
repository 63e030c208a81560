"""Utilities: files, logging, timing and configuration"""
