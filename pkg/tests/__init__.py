"""Test suite for locally sparse triple systems"""
