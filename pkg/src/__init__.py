"""Locally sparse triple systems"""
